#include "lowdeg/io.hpp"

#include "lowdeg/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace lowdeg
{

namespace
{

using nlohmann::json;

json parse_json( std::istream& is, const char* what )
{
  try
  {
    return json::parse( is );
  }
  catch ( const json::parse_error& e )
  {
    throw parse_error( std::string( what ) + ": " + e.what() );
  }
}

template<typename T>
T field( const json& j, const char* name, const char* what )
{
  if ( !j.contains( name ) )
  {
    throw parse_error( std::string( what ) + ": missing field \"" + name + "\"" );
  }
  try
  {
    return j.at( name ).get<T>();
  }
  catch ( const json::exception& e )
  {
    throw parse_error( std::string( what ) + ": field \"" + name + "\": " + e.what() );
  }
}

template<typename Writer>
void write_file( const std::filesystem::path& path, Writer&& writer )
{
  std::ofstream os( path );
  if ( !os )
  {
    throw error( "cannot open " + path.string() + " for writing" );
  }
  writer( os );
}

template<typename Reader>
auto read_file( const std::filesystem::path& path, Reader&& reader )
{
  std::ifstream is( path );
  if ( !is )
  {
    throw error( "cannot open " + path.string() + " for reading" );
  }
  return reader( is );
}

} // namespace

void write_function( std::ostream& os, const boolean_function& f )
{
  json j;
  j["n"] = f.arity();
  j["table_hex"] = f.table().to_hex();
  os << j.dump() << '\n';
}

boolean_function read_function( std::istream& is )
{
  const json j = parse_json( is, "function record" );
  const int n = field<int>( j, "n", "function record" );
  if ( n < 1 || n > boolean_function::max_arity )
  {
    throw parse_error( "function record: arity out of range" );
  }
  const auto hex = field<std::string>( j, "table_hex", "function record" );
  try
  {
    return boolean_function( n, bitvec::from_hex( std::size_t( 1 ) << n, hex ) );
  }
  catch ( const parse_error& )
  {
    throw;
  }
  catch ( const error& e )
  {
    throw parse_error( std::string( "function record: " ) + e.what() );
  }
}

void write_function_file( const std::filesystem::path& path, const boolean_function& f )
{
  write_file( path, [&]( std::ostream& os ) { write_function( os, f ); } );
}

boolean_function read_function_file( const std::filesystem::path& path )
{
  return read_file( path, []( std::istream& is ) { return read_function( is ); } );
}

void write_family( std::ostream& os, const character_family& fam )
{
  json j;
  j["n"] = fam.n;
  j["l"] = fam.l;
  j["sets"] = fam.sets;
  os << j.dump() << '\n';
}

character_family read_family( std::istream& is )
{
  const json j = parse_json( is, "family record" );
  character_family fam;
  fam.n = field<int>( j, "n", "family record" );
  fam.l = field<int>( j, "l", "family record" );
  fam.sets = field<std::vector<std::uint32_t>>( j, "sets", "family record" );
  try
  {
    fam.validate();
  }
  catch ( const error& e )
  {
    throw parse_error( std::string( "family record: " ) + e.what() );
  }
  return fam;
}

void write_family_file( const std::filesystem::path& path, const character_family& fam )
{
  write_file( path, [&]( std::ostream& os ) { write_family( os, fam ); } );
}

character_family read_family_file( const std::filesystem::path& path )
{
  return read_file( path, []( std::istream& is ) { return read_family( is ); } );
}

void write_block_instance( std::ostream& os, const block_disj_instance& inst )
{
  json j;
  j["l_blocks"] = inst.l_blocks;
  j["m"] = inst.m;
  j["k"] = inst.k;
  j["x_hex"] = inst.x.to_hex();
  j["y_hex"] = inst.y.to_hex();
  os << j.dump() << '\n';
}

block_disj_instance read_block_instance( std::istream& is )
{
  const json j = parse_json( is, "instance record" );
  block_disj_instance inst;
  inst.l_blocks = field<std::size_t>( j, "l_blocks", "instance record" );
  inst.m = field<std::size_t>( j, "m", "instance record" );
  inst.k = field<std::size_t>( j, "k", "instance record" );
  if ( inst.l_blocks == 0 || inst.m == 0 || inst.l_blocks * inst.m > ( 1u << 20 ) )
  {
    throw parse_error( "instance record: unreasonable dimensions" );
  }
  const std::size_t len = inst.l_blocks * inst.m;
  try
  {
    inst.x = bitvec::from_hex( len, field<std::string>( j, "x_hex", "instance record" ) );
    inst.y = bitvec::from_hex( len, field<std::string>( j, "y_hex", "instance record" ) );
    inst.validate();
  }
  catch ( const parse_error& )
  {
    throw;
  }
  catch ( const error& e )
  {
    throw parse_error( std::string( "instance record: " ) + e.what() );
  }
  return inst;
}

void write_block_instance_file( const std::filesystem::path& path,
                                const block_disj_instance& inst )
{
  write_file( path, [&]( std::ostream& os ) { write_block_instance( os, inst ); } );
}

block_disj_instance read_block_instance_file( const std::filesystem::path& path )
{
  return read_file( path, []( std::istream& is ) { return read_block_instance( is ); } );
}

void write_spectrum_csv( std::ostream& os, const fourier_spectrum& spec )
{
  os << "subset_mask,c_S,coefficient\n";
  for ( std::uint32_t s = 0; s < spec.size(); ++s )
  {
    os << s << ',' << spec.coeff( s ) << ',' << spec.coefficient_fraction( s ).str()
       << '\n';
  }
}

fourier_spectrum read_spectrum_csv( std::istream& is )
{
  std::string line;
  if ( !std::getline( is, line ) || line != "subset_mask,c_S,coefficient" )
  {
    throw parse_error( "spectrum csv: bad header line" );
  }
  std::vector<std::int64_t> coeffs;
  std::size_t lineno = 1;
  while ( std::getline( is, line ) )
  {
    ++lineno;
    if ( line.empty() )
    {
      continue;
    }
    std::istringstream row( line );
    std::string mask_s, c_s, frac_s;
    if ( !std::getline( row, mask_s, ',' ) || !std::getline( row, c_s, ',' ) ||
         !std::getline( row, frac_s ) )
    {
      throw parse_error( "spectrum csv: line " + std::to_string( lineno ) +
                         ": expected 3 fields" );
    }
    try
    {
      const std::size_t mask = std::stoull( mask_s );
      if ( mask != coeffs.size() )
      {
        throw parse_error(
            "spectrum csv: line " + std::to_string( lineno ) +
            ": subset masks must be consecutive from 0" );
      }
      coeffs.push_back( std::stoll( c_s ) );
    }
    catch ( const std::logic_error& )
    {
      throw parse_error( "spectrum csv: line " + std::to_string( lineno ) +
                         ": malformed integer" );
    }
  }
  int n = 0;
  while ( ( std::size_t( 1 ) << n ) < coeffs.size() )
  {
    ++n;
  }
  if ( coeffs.empty() || ( std::size_t( 1 ) << n ) != coeffs.size() )
  {
    throw parse_error( "spectrum csv: row count must be a power of two" );
  }
  return fourier_spectrum( n, std::move( coeffs ) );
}

void write_certificates_csv( std::ostream& os, std::span<const certificate_record> rows )
{
  os << "mode,l,m,tail_exact,distance_lb_exact,paper_claimed,oracle_min\n";
  for ( const auto& row : rows )
  {
    const auto& cert = row.certificate;
    os << ( cert.mode == farness_mode::heavy_set ? "prop2" : "prop3" ) << ',' << cert.l << ','
       << cert.m << ',' << cert.exact_tail.str() << ','
       << ( cert.exact_tail * dyadic( 1, 2 ) ).str() << ','
       << claimed_farness_constant( cert.mode, cert.l ).str() << ',';
    if ( row.oracle_min )
    {
      os << row.oracle_min->str();
    }
    os << '\n';
  }
}

void write_transcripts_csv( std::ostream& os, std::span<const transcript> rows )
{
  os << "seed,queries,bits,verdict\n";
  for ( const auto& row : rows )
  {
    os << row.seed << ',' << row.queries_made << ',' << row.bits_exchanged << ','
       << ( row.accepted ? "accept" : "reject" ) << '\n';
  }
}

} // namespace lowdeg
