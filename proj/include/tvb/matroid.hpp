#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvb/exact.hpp"

namespace tvb {

/// Subset of a ground set {0, ..., 63}, stored as a bitmask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }
  static IndexSet from(const std::vector<int>& elems) {
    IndexSet s;
    for (int e : elems) s.insert(e);
    return s;
  }
  static IndexSet full(int m) { return IndexSet(m >= 64 ? ~0ULL : ((1ULL << m) - 1)); }

  bool contains(int e) const { return (bits_ >> e) & 1ULL; }
  void insert(int e) { bits_ |= (1ULL << e); }
  void erase(int e) { bits_ &= ~(1ULL << e); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(__builtin_ctzll(b)));
    return out;
  }

  friend IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(IndexSet a, IndexSet b) { return a.bits_ < b.bits_; }

  std::string str() const;

 private:
  std::uint64_t bits_ = 0;
};

using Flat = IndexSet;

/// Coefficient rows of a minimal generating set of a linear ideal L in Q[y_0..y_{m-1}].
struct LinearIdealMatrix {
  QMatrix coeffs;
  std::size_t ground_size = 0;

  LinearIdealMatrix() = default;
  /// Validates: rows linearly independent, no zero row.
  LinearIdealMatrix(QMatrix c, std::size_t m);
  /// Row basis of the span of arbitrary rows (dependent or zero rows allowed).
  static LinearIdealMatrix spanned_by(const QMatrix& rows, std::size_t m);
};

struct Circuit {
  IndexSet support;
  QVector coefficients;  // length m, first nonzero entry 1
};

/// Largest-first chain of flats; chain.front() is the ground set.
struct FlagOfFlats {
  std::vector<Flat> chain;
  friend bool operator==(const FlagOfFlats& a, const FlagOfFlats& b) { return a.chain == b.chain; }
};

/// The matroid M(L): I is independent iff no element of L is supported on I.
class Matroid {
 public:
  explicit Matroid(LinearIdealMatrix ideal);

  const LinearIdealMatrix& ideal() const { return ideal_; }
  int size() const { return m_; }
  int rank() const { return rank_; }
  IndexSet ground() const { return IndexSet::full(m_); }

  int rank_of(IndexSet s) const;
  bool is_independent(IndexSet s) const { return rank_of(s) == s.size(); }
  bool is_basis(IndexSet s) const { return s.size() == rank_ && is_independent(s); }
  Flat closure(IndexSet s) const;
  bool is_flat(IndexSet s) const { return closure(s) == s; }

  const std::vector<Circuit>& circuits() const { return circuits_; }
  /// Circuit of B + j, for j outside the basis B.
  const Circuit& fundamental_circuit(IndexSet basis, int j) const;

  std::vector<IndexSet> bases() const;
  std::vector<Flat> maximal_proper_flats() const;
  IndexSet loops() const;
  IndexSet coloops() const;
  bool is_uniform() const;
  bool has_unique_basis() const;

  /// Points of V(L): columns are the images of y_j in the degree-one quotient.
  const QMatrix& representation() const { return vectors_; }

 private:
  LinearIdealMatrix ideal_;
  int m_ = 0;
  int rank_ = 0;
  QMatrix vectors_;  // rank x m, kernel of the coefficient matrix
  std::vector<Circuit> circuits_;
};

Matroid matroid_from_coefficients(const LinearIdealMatrix& m);

/// w in Trop(L): on every circuit the minimum of w is attained at least twice.
bool trop_membership(const Matroid& mat, const QVector& w);

/// w in the apartment of the basis B. Throws on a non-basis.
bool apartment_membership(const Matroid& mat, IndexSet basis, const QVector& w);

/// Initial form of a linear form: the terms of minimal w-weight.
QVector initial_form(const QVector& coeffs, const QVector& w);

/// Matroid of in_w(L), computed from initial forms of the circuits.
Matroid initial_matroid(const Matroid& mat, const QVector& w);

/// [ground, closure(first r-1), ..., closure(first 1)]. Throws on a non-basis.
FlagOfFlats flag_from_order(const Matroid& mat, const std::vector<int>& order);

/// Rows are indicator vectors of the flats, largest first.
ZMatrix flag_indicator_matrix(const FlagOfFlats& flag, std::size_t m);

/// Flag of the maximal Bergman face whose relative interior contains w, if any.
std::optional<FlagOfFlats> row_in_open_maximal_face(const Matroid& mat, const QVector& w);

bool is_maximal_flag(const Matroid& mat, const FlagOfFlats& flag);

}  // namespace tvb
