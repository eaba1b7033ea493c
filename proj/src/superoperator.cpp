#include "ncqm/superoperator.hpp"

#include <mutex>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

struct SuperOperator::Cache {
  std::once_flag once;
  CMatrix matrix;
};

namespace {

bool is_identity(const ConfigOperator& a) { return a.isIdentity(0.0); }

OperatorTerm make_term(ConfigOperator left, ConfigOperator right) {
  OperatorTerm t;
  t.left_identity = is_identity(left);
  t.right_identity = is_identity(right);
  t.left = std::move(left);
  t.right = std::move(right);
  return t;
}

void check_dim(Index a, Index b) {
  if (a != b)
    throw UsageError("superoperator cutoff mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
}

}  // namespace

SuperOperator::SuperOperator(Index dim, std::vector<OperatorTerm> terms, bool hermitian)
    : dim_(dim), terms_(std::move(terms)), hermitian_(hermitian), cache_(std::make_shared<Cache>()) {
  for (auto& t : terms_) {
    if (t.left.rows() != dim || t.left.cols() != dim || t.right.rows() != dim ||
        t.right.cols() != dim)
      throw UsageError("superoperator term does not match cutoff " + std::to_string(dim));
    t.left_identity = is_identity(t.left);
    t.right_identity = is_identity(t.right);
  }
}

SuperOperator SuperOperator::identity(Index dim) {
  const ConfigOperator id = ConfigOperator::Identity(dim, dim);
  return SuperOperator(dim, {make_term(id, id)}, true);
}

SuperOperator SuperOperator::zero(Index dim) { return SuperOperator(dim, {}, true); }

SuperOperator SuperOperator::left(const ConfigOperator& a) {
  const Index n = a.rows();
  return SuperOperator(n, {make_term(a, ConfigOperator::Identity(n, n))});
}

SuperOperator SuperOperator::right(const ConfigOperator& a) {
  const Index n = a.rows();
  return SuperOperator(n, {make_term(ConfigOperator::Identity(n, n), a)});
}

SuperOperator SuperOperator::commutator(const ConfigOperator& a) {
  const Index n = a.rows();
  const ConfigOperator id = ConfigOperator::Identity(n, n);
  return SuperOperator(n, {make_term(a, id), make_term(id, -a)});
}

SuperOperator SuperOperator::with_hermitian_flag(bool flag) const {
  SuperOperator out(dim_, terms_, flag);
  return out;
}

ConfigOperator SuperOperator::apply(const ConfigOperator& psi) const {
  check_dim(dim_, psi.rows());
  ConfigOperator out = ConfigOperator::Zero(dim_, dim_);
  for (const auto& t : terms_) {
    if (t.left_identity && t.right_identity) {
      out += psi;
    } else if (t.left_identity) {
      out.noalias() += psi * t.right;
    } else if (t.right_identity) {
      out.noalias() += t.left * psi;
    } else {
      ConfigOperator tmp = t.left * psi;
      out.noalias() += tmp * t.right;
    }
  }
  return out;
}

QuantumState SuperOperator::apply(const QuantumState& psi) const {
  return QuantumState(apply(psi.op()));
}

const CMatrix& SuperOperator::materialize() const {
  if (!cache_) throw UsageError("materialize on an empty superoperator");
  std::call_once(cache_->once, [this] {
    const Index n = dim_;
    CMatrix m = CMatrix::Zero(n * n, n * n);
    // entry [(a, b), (c, d)] = L(a, c) * R(d, b)
    for (const auto& t : terms_) {
      for (Index a = 0; a < n; ++a)
        for (Index c = 0; c < n; ++c) {
          const Complex l = t.left(a, c);
          if (l == Complex{}) continue;
          for (Index d = 0; d < n; ++d)
            for (Index b = 0; b < n; ++b) {
              const Complex r = t.right(d, b);
              if (r == Complex{}) continue;
              m(vec_index(n, a, b), vec_index(n, c, d)) += l * r;
            }
        }
    }
    cache_->matrix = std::move(m);
  });
  return cache_->matrix;
}

SuperOperator SuperOperator::adjoint() const {
  std::vector<OperatorTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(make_term(t.left.adjoint(), t.right.adjoint()));
  return SuperOperator(dim_, std::move(terms), hermitian_);
}

SuperOperator SuperOperator::simplified() const {
  // Pass 1: merge equal right factors; pass 2: merge equal left factors.
  auto merge = [](const std::vector<OperatorTerm>& in, bool by_right) {
    std::vector<OperatorTerm> out;
    for (const auto& t : in) {
      bool merged = false;
      for (auto& o : out) {
        if (by_right && o.right == t.right) {
          o.left += t.left;
          merged = true;
          break;
        }
        if (!by_right && o.left == t.left) {
          o.right += t.right;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back(t);
    }
    std::vector<OperatorTerm> pruned;
    for (auto& t : out)
      if (!t.left.isZero(0.0) && !t.right.isZero(0.0)) pruned.push_back(std::move(t));
    return pruned;
  };
  auto terms = merge(merge(terms_, true), false);
  return SuperOperator(dim_, std::move(terms), hermitian_);
}

SuperOperator operator+(const SuperOperator& a, const SuperOperator& b) {
  check_dim(a.dim_, b.dim_);
  std::vector<OperatorTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return SuperOperator(a.dim_, std::move(terms), a.hermitian_ && b.hermitian_).simplified();
}

SuperOperator operator-(const SuperOperator& a, const SuperOperator& b) { return a + (-1.0) * b; }

SuperOperator operator*(Complex c, const SuperOperator& a) {
  std::vector<OperatorTerm> terms = a.terms_;
  for (auto& t : terms) {
    t.left *= c;
    t.left_identity = is_identity(t.left);
  }
  return SuperOperator(a.dim_, std::move(terms), a.hermitian_ && c.imag() == 0.0);
}

SuperOperator operator*(double c, const SuperOperator& a) { return Complex(c, 0.0) * a; }

SuperOperator operator*(const SuperOperator& a, const SuperOperator& b) {
  check_dim(a.dim_, b.dim_);
  // a(b(psi)) = sum La (Lb psi Rb) Ra
  std::vector<OperatorTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) terms.push_back(make_term(ta.left * tb.left, tb.right * ta.right));
  return SuperOperator(a.dim_, std::move(terms)).simplified();
}

SuperOperator commutator(const SuperOperator& a, const SuperOperator& b) { return a * b - b * a; }

SuperOperator superop_from_terms(
    Index dim, const std::vector<std::pair<ConfigOperator, ConfigOperator>>& terms) {
  std::vector<OperatorTerm> out;
  out.reserve(terms.size());
  for (const auto& [l, r] : terms) out.push_back(make_term(l, r));
  return SuperOperator(dim, std::move(out));
}

double hermiticity_defect(const SuperOperator& s) {
  const CMatrix& m = s.materialize();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace ncqm
