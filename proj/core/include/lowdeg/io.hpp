#pragma once

#include "lowdeg/boolfn.hpp"
#include "lowdeg/disj.hpp"
#include "lowdeg/family.hpp"
#include "lowdeg/protocol.hpp"
#include "lowdeg/spectrum.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace lowdeg
{

/* Function record: {"n": <int>, "table_hex": <2^n bits, lsb-first nibbles,
   bit x = 1 iff f(x) = -1>} */
void write_function( std::ostream& os, const boolean_function& f );
boolean_function read_function( std::istream& is );
void write_function_file( const std::filesystem::path& path, const boolean_function& f );
boolean_function read_function_file( const std::filesystem::path& path );

/* Family record: {"n":…, "l":…, "sets":[…]} with ambient masks over
   coordinates l+1..n, listed by prefix key 0..2^l-1 */
void write_family( std::ostream& os, const character_family& fam );
character_family read_family( std::istream& is );
void write_family_file( const std::filesystem::path& path, const character_family& fam );
character_family read_family_file( const std::filesystem::path& path );

/* Block-DISJ record: {"l_blocks":…, "m":…, "k":…, "x_hex":…, "y_hex":…},
   +1 encoded as a set bit */
void write_block_instance( std::ostream& os, const block_disj_instance& inst );
block_disj_instance read_block_instance( std::istream& is );
void write_block_instance_file( const std::filesystem::path& path,
                                const block_disj_instance& inst );
block_disj_instance read_block_instance_file( const std::filesystem::path& path );

/* Spectrum CSV: subset_mask,c_S,coefficient with the coefficient rendered as
   an exact "p/2^q" string */
void write_spectrum_csv( std::ostream& os, const fourier_spectrum& spec );
fourier_spectrum read_spectrum_csv( std::istream& is );

/* Certificate CSV rows: mode,l,m,tail_exact,distance_lb_exact,paper_claimed,
   oracle_min (empty when no oracle value is available) */
struct certificate_record
{
  farness_certificate_t certificate;
  std::optional<dyadic> oracle_min;
};
void write_certificates_csv( std::ostream& os, std::span<const certificate_record> rows );

/* Transcript CSV: seed,queries,bits,verdict */
void write_transcripts_csv( std::ostream& os, std::span<const transcript> rows );

} // namespace lowdeg
