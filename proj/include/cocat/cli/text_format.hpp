#pragma once

// The structured-text format shared by every host category.
//
// A document is a whitespace-separated token stream; '#' starts a comment
// that runs to the end of the line.  Fields come in a fixed order:
//
//   category <finset|abgp|chain|cat>
//   q0 <object>   q1 <object>
//   l <map>   r <map>   i <map>   q <map>
//   [double <object>   nu1 <map>   nu2 <map>]
//
// The optional trailing block supplies the double pushout Q1 +_{Q0} Q1 with
// its injections; without it the host's canonical pushout of (r, l) is used
// and q is read against that apex.
//
// Objects and maps per host (all integers decimal, matrices row-major):
//   finset  object: size n              map: dom.size values
//   abgp    object: generators g, then the relations matrix
//           map: a matrix, column j the image of generator j
//   chain   object: top degree t, ranks of degrees 0..t, then the t
//           boundary matrices of degrees 1..t
//           map: a count k, then k matrices for degrees 0..k-1
//   cat     object: objects n and morphisms m; m pairs "src tgt"; n identity
//           indices; a count k and k triples "g f h" meaning g.f = h for
//           every composable pair of non-identity morphisms
//           map: dom.objects object images, then dom.morphisms morphism images
// A matrix is "rows cols" followed by rows*cols entries.

#include <string>
#include <string_view>
#include <variant>

#include "cocat/abgp/category.hpp"
#include "cocat/chain/complex.hpp"
#include "cocat/fincat/pushout.hpp"
#include "cocat/finset/finset.hpp"

namespace cocat::cli {

enum class Host { FinSet, AbGp, Chain, Cat };

std::string_view host_name(Host h) noexcept;
/// Throws ParseError for an unknown name.
Host parse_host(std::string_view name);

using AnyCoCategory =
    std::variant<finset::CoCategory, abgp::CoCategory, chain::CoCategory, fincat::CoCategory>;

Host host_of(const AnyCoCategory& d) noexcept;

/// Throws ParseError naming the line and field at fault.
AnyCoCategory parse_cocategory(std::string_view text);
AnyCoCategory read_cocategory_file(const std::string& path);

/// Writes a document that parses back to the same structure, including the
/// double pushout witness.
std::string write_cocategory(const AnyCoCategory& d);

}  // namespace cocat::cli
