#pragma once

// Intersection posets, characteristic/Poincare polynomials, Zaslavsky
// chamber counts, exact chamber enumeration, simpliciality, and
// finite-field point counts for finite affine arrangements.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbconf/arrangement_spec.hpp"
#include "orbconf/polynomial.hpp"

namespace orbconf {

/// A nonempty intersection of hyperplanes.
template <class Scalar>
struct Flat {
  Eigen::Index dim = 0;
  std::vector<int> hyperplanes;  ///< every hyperplane containing the flat, ascending
  Matrix<Scalar> equations;      ///< reduced row echelon form of the augmented system [A | b]
  std::vector<Eigen::Index> pivots;
  Integer mobius;
};

template <class Scalar>
struct FlatPoset {
  Eigen::Index ambient_dim = 0;
  std::vector<Flat<Scalar>> flats;          ///< flats[0] is the ambient space; sorted by dim descending
  std::vector<std::pair<int, int>> covers;  ///< (upper, lower) with dim(upper) = dim(lower) + 1

  /// Largest codimension of a flat.
  Eigen::Index rank() const;
  std::map<Eigen::Index, int> count_by_dim() const;
};

template <class Scalar>
FlatPoset<Scalar> flat_poset(const Hyperplanes<Scalar>& h);

/// A point on the flat and a basis (columns) of its direction space.
template <class Scalar>
Vector<Scalar> anchor_point(const Flat<Scalar>& f, Eigen::Index ambient_dim);
template <class Scalar>
Matrix<Scalar> direction_basis(const Flat<Scalar>& f, Eigen::Index ambient_dim);

/// sum over flats of mu(X) t^dim(X).
template <class Scalar>
Polynomial characteristic_polynomial(const FlatPoset<Scalar>& p);

/// sum over flats of |mu(X)| t^codim(X); cross-checked against (-t)^d chi(-1/t).
template <class Scalar>
Polynomial poincare_polynomial(const FlatPoset<Scalar>& p);

struct ChamberCount {
  Integer total;
  Integer bounded;
};

/// Zaslavsky: total = (-1)^d chi(-1), bounded = (-1)^rank chi(1).
ChamberCount chamber_count(const FlatPoset<Rational>& p);
/// Always throws NotRealError: cyclotomic arrangements have no real form here.
ChamberCount chamber_count(const FlatPoset<Cyclotomic>& p);

/// Restriction A|_H of the other hyperplanes to hyperplane i, in coordinates
/// y of H given by x = origin + basis * y.
template <class Scalar>
struct Restriction {
  Hyperplanes<Scalar> hyperplanes;
  Vector<Scalar> origin;
  Matrix<Scalar> basis;
};

template <class Scalar>
Restriction<Scalar> restrict_to(const Hyperplanes<Scalar>& h, Eigen::Index i);

/// Normalizes (leading normal entry 1), drops duplicates, keeps input order.
template <class Scalar>
Hyperplanes<Scalar> normalize_unique(const Hyperplanes<Scalar>& h);

// ------------------------------------------------------ spec-level wrappers

using RationalPoset = FlatPoset<Rational>;
using CyclotomicPoset = FlatPoset<Cyclotomic>;

/// Intersection poset computed over Q when possible.
struct ArrangementPoset {
  std::optional<RationalPoset> rational;
  std::optional<CyclotomicPoset> cyclotomic;

  Polynomial characteristic() const;
  Polynomial poincare() const;
  std::map<Eigen::Index, int> count_by_dim() const;
  Eigen::Index rank() const;
  std::size_t size() const;
};

ArrangementPoset flat_poset(const ArrangementSpec& a);
ChamberCount chamber_count(const ArrangementPoset& p);

ArrangementSpec restriction(const ArrangementSpec& a, Eigen::Index i);

struct ChamberLimits {
  int max_dim = 6;
  int max_hyperplanes = 12;
};

struct Chamber {
  std::vector<int8_t> signs;  ///< +1 / -1 per hyperplane
  Vector<Rational> witness;
};

struct ChamberSet {
  std::vector<Chamber> chambers;  ///< sorted by sign vector
  std::size_t size() const { return chambers.size(); }
};

/// All realizable sign vectors of a rational arrangement, by incremental
/// insertion with exact witnesses. Throws SizeError beyond the limits.
ChamberSet enumerate_chambers(const ArrangementSpec& a, ChamberLimits limits = {});
ChamberSet enumerate_chambers(const Hyperplanes<Rational>& h);

struct SimplicialCertificate {
  bool simplicial = false;
  Eigen::Index rank = 0;
  std::size_t chambers = 0;
  std::vector<int> wall_counts;  ///< per chamber, in ChamberSet order
  std::string definition;
};

/// Every chamber of the essentialized central arrangement is a simplicial
/// cone: exactly rank walls with independent normals.
SimplicialCertificate is_simplicial(const ArrangementSpec& a, ChamberLimits limits = {6, 16});

/// Hyperplanes of a rational arrangement scaled to primitive integer rows [a | b].
std::vector<std::vector<Integer>> integer_rows(const ArrangementSpec& a);

/// Primes for which reduction mod p may change the intersection poset.
std::set<long> bad_primes(const ArrangementSpec& a);

/// The first `count` primes that are usable for finite_field_count.
std::vector<long> good_primes(const ArrangementSpec& a, int count);

/// Points of F_q^d off every hyperplane, by direct enumeration.
Integer finite_field_count(const ArrangementSpec& a, long q);

bool is_prime(long n);

}  // namespace orbconf
