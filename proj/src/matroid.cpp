#include "tvb/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tvb {

std::string IndexSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << '}';
  return os.str();
}

LinearIdealMatrix::LinearIdealMatrix(QMatrix c, std::size_t m) : coeffs(std::move(c)), ground_size(m) {
  if (coeffs.rows() > 0 && coeffs.cols() != m) throw InvalidInput("ideal generator length differs from ground size");
  if (coeffs.rows() == 0) coeffs = QMatrix(0, m);
  if (m > 64) throw InvalidInput("ground sets larger than 64 are not supported");
  for (std::size_t i = 0; i < coeffs.rows(); ++i)
    if (is_zero(coeffs.row(i))) throw InvalidInput("zero generator row " + std::to_string(i));
  if (rank(coeffs) != coeffs.rows()) throw InvalidInput("ideal generators are linearly dependent");
}

LinearIdealMatrix LinearIdealMatrix::spanned_by(const QMatrix& rows, std::size_t m) {
  if (rows.rows() == 0) return LinearIdealMatrix(QMatrix(0, m), m);
  return LinearIdealMatrix(row_space_basis(rows), m);
}

Matroid::Matroid(LinearIdealMatrix ideal) : ideal_(std::move(ideal)) {
  m_ = static_cast<int>(ideal_.ground_size);
  if (ideal_.coeffs.rows() == 0) {
    vectors_ = QMatrix::identity(static_cast<std::size_t>(m_));
  } else {
    vectors_ = kernel_basis(ideal_.coeffs);
  }
  rank_ = static_cast<int>(vectors_.rows());
  if (vectors_.rows() == 0) vectors_ = QMatrix(0, static_cast<std::size_t>(m_));

  // Minimal dependent sets, by increasing size; a circuit has at most rank + 1 elements.
  std::vector<IndexSet> found;
  const std::uint64_t limit = 1ULL << m_;
  std::vector<std::vector<IndexSet>> by_size(static_cast<std::size_t>(m_) + 1);
  for (std::uint64_t b = 1; b < limit; ++b) {
    IndexSet s(b);
    if (s.size() <= rank_ + 1) by_size[static_cast<std::size_t>(s.size())].push_back(s);
  }
  for (const auto& level : by_size) {
    for (IndexSet s : level) {
      bool has_smaller = std::any_of(found.begin(), found.end(), [&](IndexSet c) { return c.subset_of(s); });
      if (has_smaller || is_independent(s)) continue;
      found.push_back(s);
      QMatrix sub = vectors_.select_cols(s.indices());
      QMatrix ker = kernel_basis(sub);
      Circuit c;
      c.support = s;
      c.coefficients.assign(static_cast<std::size_t>(m_), Rational(0));
      auto idx = s.indices();
      Rational lead = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (lead == 0 && ker(0, k) != 0) lead = ker(0, k);
      }
      for (std::size_t k = 0; k < idx.size(); ++k) c.coefficients[idx[k]] = ker(0, k) / lead;
      circuits_.push_back(std::move(c));
    }
  }
}

int Matroid::rank_of(IndexSet s) const {
  if (s.empty() || rank_ == 0) return 0;
  return static_cast<int>(tvb::rank(vectors_.select_cols(s.indices())));
}

Flat Matroid::closure(IndexSet s) const {
  const int r = rank_of(s);
  Flat out = s;
  for (int j = 0; j < m_; ++j) {
    if (s.contains(j)) continue;
    IndexSet t = s;
    t.insert(j);
    if (rank_of(t) == r) out.insert(j);
  }
  return out;
}

const Circuit& Matroid::fundamental_circuit(IndexSet basis, int j) const {
  IndexSet scope = basis;
  scope.insert(j);
  for (const auto& c : circuits_)
    if (c.support.contains(j) && c.support.subset_of(scope)) return c;
  throw InvalidInput("no fundamental circuit: " + basis.str() + " + " + std::to_string(j));
}

std::vector<IndexSet> Matroid::bases() const {
  std::vector<IndexSet> out;
  const std::uint64_t limit = 1ULL << m_;
  for (std::uint64_t b = 0; b < limit; ++b) {
    IndexSet s(b);
    if (s.size() == rank_ && is_independent(s)) out.push_back(s);
  }
  return out;
}

std::vector<Flat> Matroid::maximal_proper_flats() const {
  if (rank_ < 1) throw InvalidInput("maximal proper flats need rank >= 1");
  std::set<std::uint64_t> seen;
  std::vector<Flat> out;
  const std::uint64_t limit = 1ULL << m_;
  for (std::uint64_t b = 0; b < limit; ++b) {
    IndexSet s(b);
    if (s.size() != rank_ - 1 || !is_independent(s)) continue;
    Flat f = closure(s);
    if (seen.insert(f.bits()).second) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](Flat a, Flat b) { return a.elements() < b.elements(); });
  return out;
}

IndexSet Matroid::loops() const { return closure(IndexSet()); }

IndexSet Matroid::coloops() const {
  IndexSet out;
  for (int j = 0; j < m_; ++j) {
    IndexSet rest = ground();
    rest.erase(j);
    if (rank_of(rest) < rank_) out.insert(j);
  }
  return out;
}

bool Matroid::is_uniform() const {
  const std::uint64_t limit = 1ULL << m_;
  for (std::uint64_t b = 0; b < limit; ++b) {
    IndexSet s(b);
    if (s.size() == rank_ && !is_independent(s)) return false;
  }
  return true;
}

bool Matroid::has_unique_basis() const { return (loops() | coloops()) == ground(); }

Matroid matroid_from_coefficients(const LinearIdealMatrix& m) { return Matroid(m); }

bool trop_membership(const Matroid& mat, const QVector& w) {
  if (w.size() != static_cast<std::size_t>(mat.size())) throw InvalidInput("weight length differs from ground size");
  for (const auto& c : mat.circuits()) {
    auto idx = c.support.indices();
    Rational best = w[idx.front()];
    for (auto j : idx) best = std::min(best, w[j]);
    int hits = 0;
    for (auto j : idx) hits += (w[j] == best);
    if (hits < 2) return false;
  }
  return true;
}

bool apartment_membership(const Matroid& mat, IndexSet basis, const QVector& w) {
  if (!mat.is_basis(basis)) throw InvalidInput("not a basis: " + basis.str());
  if (!trop_membership(mat, w)) return false;
  for (int j = 0; j < mat.size(); ++j) {
    if (basis.contains(j)) continue;
    const Circuit& c = mat.fundamental_circuit(basis, j);
    IndexSet rest = c.support;
    rest.erase(j);
    auto idx = rest.indices();
    Rational best = w[idx.front()];
    for (auto k : idx) best = std::min(best, w[k]);
    if (w[static_cast<std::size_t>(j)] != best) return false;
  }
  return true;
}

QVector initial_form(const QVector& coeffs, const QVector& w) {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0 && (!best || w[j] < *best)) best = w[j];
  QVector out(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0 && w[j] == *best) out[j] = coeffs[j];
  return out;
}

Matroid initial_matroid(const Matroid& mat, const QVector& w) {
  if (w.size() != static_cast<std::size_t>(mat.size())) throw InvalidInput("weight length differs from ground size");
  QMatrix forms(0, static_cast<std::size_t>(mat.size()));
  for (const auto& c : mat.circuits()) forms.append_row(initial_form(c.coefficients, w));
  return Matroid(LinearIdealMatrix::spanned_by(forms, static_cast<std::size_t>(mat.size())));
}

FlagOfFlats flag_from_order(const Matroid& mat, const std::vector<int>& order) {
  if (!mat.is_basis(IndexSet::from(order)) || order.size() != static_cast<std::size_t>(mat.rank()))
    throw InvalidInput("flag order is not a basis");
  FlagOfFlats flag;
  flag.chain.push_back(mat.ground());
  for (std::size_t k = order.size() - 1; k >= 1; --k) {
    IndexSet prefix;
    for (std::size_t t = 0; t < k; ++t) prefix.insert(order[t]);
    flag.chain.push_back(mat.closure(prefix));
  }
  return flag;
}

ZMatrix flag_indicator_matrix(const FlagOfFlats& flag, std::size_t m) {
  ZMatrix e(flag.chain.size(), m);
  for (std::size_t k = 0; k < flag.chain.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) e(k, j) = flag.chain[k].contains(static_cast<int>(j)) ? 1 : 0;
  return e;
}

std::optional<FlagOfFlats> row_in_open_maximal_face(const Matroid& mat, const QVector& w) {
  if (!trop_membership(mat, w)) return std::nullopt;
  std::vector<Rational> values(w.begin(), w.end());
  std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return a > b; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (static_cast<int>(values.size()) != mat.rank()) return std::nullopt;
  FlagOfFlats flag;
  for (std::size_t t = values.size(); t-- > 0;) {
    IndexSet level;
    for (int j = 0; j < mat.size(); ++j)
      if (w[static_cast<std::size_t>(j)] >= values[t]) level.insert(j);
    if (!mat.is_flat(level) || mat.rank_of(level) != static_cast<int>(t) + 1) return std::nullopt;
    flag.chain.push_back(level);
  }
  return flag;
}

bool is_maximal_flag(const Matroid& mat, const FlagOfFlats& flag) {
  if (static_cast<int>(flag.chain.size()) != mat.rank() || flag.chain.empty()) return false;
  if (!(flag.chain.front() == mat.ground())) return false;
  for (std::size_t k = 0; k < flag.chain.size(); ++k) {
    const Flat& f = flag.chain[k];
    if (!mat.is_flat(f) || mat.rank_of(f) != mat.rank() - static_cast<int>(k)) return false;
    if (k > 0 && !(f.subset_of(flag.chain[k - 1]) && !(f == flag.chain[k - 1]))) return false;
  }
  return true;
}

}  // namespace tvb
