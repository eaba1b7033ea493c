#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "ncqm/dynamics.hpp"
#include "ncqm/error.hpp"
#include "ncqm/observables.hpp"
#include "ncqm/parallel.hpp"

namespace ncqm {

namespace {

// Dense blocks beyond this size are refused rather than silently taking hours.
constexpr Index kMaxBlock = 4096;
// Above this many candidate couplings the sparsity scan is skipped.
constexpr double kMaxScanWork = 5e7;

class DisjointSets {
 public:
  explicit DisjointSets(Index n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Index> parent_;
};

struct Sparsity {
  std::vector<std::vector<Index>> left_cols;   // rows a with L(a, c) != 0, per column c
  std::vector<std::vector<Index>> right_rows;  // cols b with R(d, b) != 0, per row d
};

Sparsity sparsity(const OperatorTerm& t, Index n) {
  Sparsity s{std::vector<std::vector<Index>>(n), std::vector<std::vector<Index>>(n)};
  for (Index c = 0; c < n; ++c)
    for (Index a = 0; a < n; ++a)
      if (t.left(a, c) != Complex{}) s.left_cols[c].push_back(a);
  for (Index d = 0; d < n; ++d)
    for (Index b = 0; b < n; ++b)
      if (t.right(d, b) != Complex{}) s.right_rows[d].push_back(b);
  return s;
}

double nnz(const ConfigOperator& a) { return static_cast<double>((a.array() != Complex{}).count()); }

}  // namespace

SpectralDecomposition::SpectralDecomposition(const SuperOperator& h, double hermitian_tol)
    : dim_(h.dim()) {
  const Index n = dim_;
  const Index total = n * n;
  std::vector<Sparsity> patterns;
  patterns.reserve(h.terms().size());
  double work = 0.0;
  for (const auto& t : h.terms()) work += nnz(t.left) * nnz(t.right);

  for (const auto& t : h.terms()) patterns.push_back(sparsity(t, n));

  std::vector<std::vector<Index>> groups;
  if (work <= kMaxScanWork) {
    DisjointSets sets(total);
    for (const auto& p : patterns)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          for (Index a : p.left_cols[c])
            for (Index b : p.right_rows[d]) sets.unite(vec_index(n, c, d), vec_index(n, a, b));
    std::vector<Index> slot(static_cast<std::size_t>(total), -1);
    for (Index i = 0; i < total; ++i) {
      const Index root = sets.find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<Index>(groups.size());
        groups.emplace_back();
      }
      groups[slot[root]].push_back(i);
    }
  } else {
    groups.emplace_back(static_cast<std::size_t>(total));
    std::iota(groups.front().begin(), groups.front().end(), Index{0});
  }

  for (const auto& g : groups)
    if (static_cast<Index>(g.size()) > kMaxBlock)
      throw UsageError("spectral solve: coupled block of size " + std::to_string(g.size()) +
                       " exceeds the dense limit " + std::to_string(kMaxBlock));

  blocks_.resize(groups.size());
  std::vector<std::string> failures(groups.size());
  parallel_for(groups.size(), [&](std::size_t gi) {
    Block& blk = blocks_[gi];
    blk.members = std::move(groups[gi]);
    const Index size = static_cast<Index>(blk.members.size());
    std::vector<Index> local(static_cast<std::size_t>(total), -1);
    for (Index k = 0; k < size; ++k) local[blk.members[k]] = k;

    CMatrix m = CMatrix::Zero(size, size);
    for (Index j = 0; j < size; ++j) {
      const Index c = blk.members[j] / n;
      const Index d = blk.members[j] % n;
      for (std::size_t ti = 0; ti < patterns.size(); ++ti) {
        const OperatorTerm& t = h.terms()[ti];
        for (Index a : patterns[ti].left_cols[c])
          for (Index b : patterns[ti].right_rows[d])
            m(local[vec_index(n, a, b)], j) += t.left(a, c) * t.right(d, b);
      }
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (defect > hermitian_tol * scale) {
      failures[gi] = "superoperator is not Hermitian (defect " + std::to_string(defect) + ")";
      return;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
      failures[gi] = "eigensolver failed on a block of size " + std::to_string(size);
      return;
    }
    blk.values = solver.eigenvalues();
    blk.vectors = solver.eigenvectors();
  });
  for (const auto& f : failures) {
    if (f.empty()) continue;
    if (f.rfind("superoperator is not Hermitian", 0) == 0) throw ValidationError(f);
    throw NumericalError(f);
  }

  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (Index k = 0; k < blocks_[bi].values.size(); ++k) order_.emplace_back(bi, k);
  std::stable_sort(order_.begin(), order_.end(), [this](const auto& x, const auto& y) {
    return blocks_[x.first].values(x.second) < blocks_[y.first].values(y.second);
  });
  values_.reserve(order_.size());
  for (const auto& [bi, k] : order_) values_.push_back(blocks_[bi].values(k));
}

std::size_t SpectralDecomposition::largest_block() const {
  std::size_t out = 0;
  for (const auto& b : blocks_) out = std::max(out, b.members.size());
  return out;
}

QuantumState SpectralDecomposition::eigenstate(std::size_t k) const {
  if (k >= order_.size()) throw UsageError("eigenstate index out of range");
  const auto& [bi, col] = order_[k];
  const Block& blk = blocks_[bi];
  CVector v = CVector::Zero(dim_ * dim_);
  for (std::size_t i = 0; i < blk.members.size(); ++i)
    v(blk.members[i]) = blk.vectors(static_cast<Index>(i), col);
  return unvectorize(v, dim_);
}

const std::vector<Index>& SpectralDecomposition::block_members(std::size_t k) const {
  if (k >= order_.size()) throw UsageError("eigenvalue index out of range");
  return blocks_[order_[k].first].members;
}

QuantumState SpectralDecomposition::evolve(const QuantumState& psi, double t, double hbar) const {
  if (psi.dim() != dim_) throw UsageError("evolve: cutoff mismatch");
  const CVector in = vectorize(psi);
  CVector out = CVector::Zero(in.size());
  for (const auto& blk : blocks_) {
    const Index size = static_cast<Index>(blk.members.size());
    CVector local(size);
    for (Index i = 0; i < size; ++i) local(i) = in(blk.members[i]);
    CVector coeff = blk.vectors.adjoint() * local;
    for (Index i = 0; i < size; ++i) coeff(i) *= std::exp(-kI * blk.values(i) * t / hbar);
    local = blk.vectors * coeff;
    for (Index i = 0; i < size; ++i) out(blk.members[i]) = local(i);
  }
  return unvectorize(out, dim_);
}

namespace {

// Rotate the global phase so the first largest-magnitude component is real positive.
QuantumState fix_phase(const QuantumState& psi) {
  const CVector v = vectorize(psi);
  const double big = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= (1.0 - 1e-8) * big) {
      const Complex phase = std::conj(v(i)) / std::abs(v(i));
      return phase * psi;
    }
  }
  return psi;
}

bool lexicographic_less(const QuantumState& a, const QuantumState& b) {
  const CVector va = vectorize(a);
  const CVector vb = vectorize(b);
  for (Index i = 0; i < va.size(); ++i) {
    if (va(i).real() != vb(i).real()) return va(i).real() < vb(i).real();
    if (va(i).imag() != vb(i).imag()) return va(i).imag() < vb(i).imag();
  }
  return false;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

SpectrumResult solve_spectrum(const SpectralDecomposition& decomposition, const SuperOperator& lz,
                              std::size_t count) {
  const std::size_t total = decomposition.size();
  if (count > total)
    throw UsageError("solve_spectrum: requested " + std::to_string(count) + " levels but only " +
                     std::to_string(total) + " exist");
  const auto& values = decomposition.eigenvalues();
  // Extend past `count` to the end of a degenerate cluster so the tie-break is complete.
  std::size_t end = count;
  while (end > 0 && end < total && close(values[end - 1], values[end])) ++end;

  struct Level {
    double energy;
    double lz;
    QuantumState state;
  };
  std::vector<Level> levels;
  levels.reserve(end);
  for (std::size_t k = 0; k < end; ++k) {
    QuantumState s = fix_phase(decomposition.eigenstate(k));
    const double lzv = hs_inner(s, lz.apply(s)).real();
    levels.push_back({values[k], lzv, std::move(s)});
  }

  std::size_t start = 0;
  while (start < levels.size()) {
    std::size_t stop = start + 1;
    while (stop < levels.size() && close(levels[stop - 1].energy, levels[stop].energy)) ++stop;
    std::stable_sort(levels.begin() + start, levels.begin() + stop,
                     [](const Level& a, const Level& b) {
                       if (!close(a.lz, b.lz)) return a.lz < b.lz;
                       return lexicographic_less(a.state, b.state);
                     });
    start = stop;
  }

  SpectrumResult out;
  for (std::size_t k = 0; k < count; ++k) {
    out.eigenvalues.push_back(levels[k].energy);
    out.lz_expectations.push_back(levels[k].lz);
    const Index n = levels[k].state.dim();
    out.edge_weights.push_back(support_weight(levels[k].state, std::max<Index>(1, n - 5)));
    out.eigenstates.push_back(std::move(levels[k].state));
  }
  return out;
}

SpectrumResult solve_spectrum(const Hamiltonian& h, std::size_t count) {
  const std::size_t n2 = static_cast<std::size_t>(h.context().dim() * h.context().dim());
  if (count > n2)
    throw UsageError("solve_spectrum: requested " + std::to_string(count) + " levels but only " +
                     std::to_string(n2) + " exist");
  const SpectralDecomposition decomposition(h.op());
  return solve_spectrum(decomposition, angular_momentum_commutator_form(h.context()), count);
}

QuantumState evolve(const QuantumState& psi0, const Hamiltonian& h, double t) {
  const SpectralDecomposition decomposition(h.op());
  return decomposition.evolve(psi0, t, h.context().params().hbar);
}

}  // namespace ncqm
