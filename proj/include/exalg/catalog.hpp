#pragma once

#include <string>
#include <vector>

#include "exalg/cdga.hpp"
#include "exalg/ringmaps.hpp"
#include "exalg/series.hpp"

namespace exalg {

// The catalog is the fixed table of named objects the theorem suite draws
// on: quotient-ring presentations, differential graded algebra models,
// graded ring maps, fixed-point weight tables, claimed cohomology basis
// families, and special dimension series. Every entry carries the reference
// string reported next to the checks that exercise it.

enum class EntryKind {
    presentation,
    cdga,
    ring_map,
    weight_table,
    basis_family,
    series,
};

struct CatalogEntry {
    EntryKind kind;
    std::string name;
    std::string paper_ref;
};

// all entries, sorted by name; the table is immutable
const std::vector<CatalogEntry>& paper_catalog();

// lookup by name; throws std::out_of_range for unknown names
const CatalogEntry& catalog_entry(const std::string& name);

// key for the four quotient presentations handled by catalog_presentation
PresentationKey catalog_presentation_key(const std::string& name);

// Q[x,y]/<e_n> with the degree-2n Euler form of the n-th stratum sphere
// bundle as relation
RingPresentation catalog_sphere_quotient(int n);

// Models, all on six or four generators:
//   "sec-4-symp-model"         free on t,x,y,w of degrees 1,3,3,4l+2i
//   "sec-4-symp-blowup-model"  free on t,x,y,w of degrees 1,1,1,4l+2i-2
//   "thm-5.1-model"            a,b,e,f,g,h; de=a^2, df=b^2, dh=q*b*g
//   "thm-6.3-model"            d,e,f,v,g,h; de=d^2, dh=-q*d*g
// The free models ignore q. Throws std::invalid_argument for bad parameters.
CdgaSpec catalog_cdga(const std::string& name, int ell, int i, const Rat& q,
                      FieldSpec field = FieldSpec::rationals());

// Claimed basis families of cocycle representatives, every degree
// <= max_degree covered:
//   "cor-7.1-family"  for thm-5.1-model specs
//   "cor-7.2-family"  for thm-6.3-model specs
// q is read from spec.parameters().
std::vector<BasisRecipe> catalog_basis_family(const std::string& name,
                                              const CdgaSpec& spec,
                                              int max_degree);

// Special dimension series:
//   "cor-7.4-zp-series"        prime-field basis count series, ell=1, i=0
//   "cor-7.5-tensor-quotient"  words in letters 2,3,4 not ending in 2
//   "thm-3.1-fiber-series"     product of the base and fiber series of the
//                              embedding-space fibration
RationalGF catalog_series(const std::string& name, int ell, int i);

}  // namespace exalg
