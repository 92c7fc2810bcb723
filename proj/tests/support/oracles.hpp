#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tqr/abelian.hpp"
#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"
#include "tqr/counterexample.hpp"
#include "tqr/group.hpp"

// Brute-force reference computations. They work element by element and share
// no code path with the library beyond the multiplication table itself.
namespace tqr::oracle {

/// Class sizes from direct conjugation, sorted ascending.
std::vector<std::size_t> class_sizes(const GroupTable& g);
/// Conjugacy class of every element, numbered by first appearance.
std::vector<std::size_t> class_labels(const GroupTable& g);
std::vector<Element> center(const GroupTable& g);
/// Every subset of classes containing {e} that is closed under products.
std::vector<std::vector<Element>> normal_subgroups(const GroupTable& g);
bool is_subgroup(const GroupTable& g, const std::vector<Element>& members);

/// chi on every element of G.
std::vector<std::complex<double>> on_elements(const CharTable& t, IrrepId l);
std::vector<std::complex<double>> on_elements(const ClassFunction& f);

/// chi(x) chi(y) = chi(1)/|G| sum_g chi(x g y g^-1), checked on all pairs of class
/// representatives; holds exactly for irreducible characters.
double irreducibility_residual(const CharTable& t, IrrepId l);

/// <f, chi^l> summed over all elements.
std::vector<std::complex<double>> multiplicities(const CharTable& t, const std::vector<std::complex<double>>& f);
/// Rounds multiplicities, failing (returns empty) when any is not a non-negative integer.
std::vector<std::int64_t> integer_multiplicities(const CharTable& t, const std::vector<std::complex<double>>& f);

/// Character of the reduced representation sum_{l in supp} dim(l) l, on elements.
std::vector<std::complex<double>> reduced_on_elements(const CharTable& t, const std::vector<bool>& support);
/// Multiplicities of V1~ (x) ... (x) Vr~ from elementwise products.
std::vector<std::int64_t> tensor_multiplicities(const CharTable& t, const std::vector<std::vector<bool>>& supports);

/// Kernel of the chain . (x) V~ from elementwise decompositions, and its t-th power applied to a start.
std::vector<std::vector<double>> chain_kernel(const CharTable& t, const std::vector<bool>& support);
std::vector<double> chain_distribution(const std::vector<std::vector<double>>& kernel, IrrepId start, int steps);

/// <Ind_H^G theta, chi^l> = <theta, Res chi^l>_H for every irrep l (Frobenius reciprocity).
/// `theta[i]` is the value at `h[i]`.
std::vector<std::complex<double>> induced_multiplicities(const CharTable& t, const std::vector<Element>& h,
                                                         const std::vector<std::complex<double>>& theta);

/// mA in Z_{n_1} x ... x Z_{n_r} via coordinate tuples.
std::vector<Element> sumset(const std::vector<std::uint32_t>& factors, const std::vector<Element>& a, int m);

/// n B in Z^d by enumerating all multisets of size n.
std::vector<LatticePoint> lattice_multiple(const std::vector<LatticePoint>& b, int n);
/// Every point of mnB lies in some t + nB.
bool cover_is_valid(const std::vector<LatticePoint>& b, int n, int m, const std::vector<LatticePoint>& translates);

}  // namespace tqr::oracle
