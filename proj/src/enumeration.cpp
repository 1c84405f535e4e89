#include "pcpw/enumeration.hpp"

#include <map>

#include "pcpw/fpkernel.hpp"

namespace pcpw {

namespace {

/// Principal closures of all nonzero vectors under the given generator
/// matrices, deduplicated, then closed under pairwise sums (the join in
/// the submodule lattice).  Returns canonical RREF row sets keyed for
/// deterministic order.
std::map<std::string, std::vector<fp::Row>> lattice_by_closure(
    const std::vector<fp::Mat>& gens, std::size_t n, std::uint32_t p,
    std::uint64_t cap, Exec exec) {
  // exhaustive lattice walks are kept to desk scale
  if (n > 12)
    throw cap_exceeded_error("exhaustive enumeration is limited to ambient "
                             "dimension 12 (got " + std::to_string(n) + ")");
  const std::uint64_t total = fp::checked_power(p, n, cap);
  std::map<std::string, std::vector<fp::Row>> found;
  // the zero subspace is always present
  found.emplace(fp::SpanAcc(n, p).key(), std::vector<fp::Row>{});
#ifdef _OPENMP
  if (exec == Exec::parallel && total > 128) {
#pragma omp parallel
    {
      std::map<std::string, std::vector<fp::Row>> local;
#pragma omp for schedule(dynamic, 32) nowait
      for (long long i = 1; i < static_cast<long long>(total); ++i) {
        auto acc = fp::closure(gens, fp::index_to_vector(i, n, p), p);
        local.emplace(acc.key(), acc.rows());
      }
#pragma omp critical
      found.merge(local);
    }
  } else
#endif
  {
    (void)exec;
    for (std::uint64_t i = 1; i < total; ++i) {
      auto acc = fp::closure(gens, fp::index_to_vector(i, n, p), p);
      found.emplace(acc.key(), acc.rows());
    }
  }
  // join-closure under sums
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const std::vector<fp::Row>*> items;
    for (const auto& kv : found) items.push_back(&kv.second);
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        fp::SpanAcc acc(n, p);
        for (const auto& r : *items[i]) acc.add(r);
        for (const auto& r : *items[j]) acc.add(r);
        if (found.emplace(acc.key(), acc.rows()).second) grew = true;
      }
  }
  return found;
}

std::vector<Subspace> to_subspaces(
    const Field& f, std::size_t n,
    const std::map<std::string, std::vector<fp::Row>>& found,
    std::uint32_t p) {
  std::vector<std::pair<std::size_t, Subspace>> items;
  for (const auto& kv : found) {
    fp::SpanAcc acc(n, p);
    for (const auto& r : kv.second) acc.add(r);
    items.emplace_back(acc.dim(), fp::to_subspace(f, acc));
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Subspace> out;
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const Algebra& a, std::uint64_t cap,
                                    Exec exec) {
  if (!a.field.is_prime_field())
    throw unsupported_field_error(
        "ideal enumeration is only available over prime fields");
  const std::uint32_t p = a.field.modulus();
  std::vector<fp::Mat> gens;
  for (std::size_t k = 0; k < a.dim; ++k) {
    gens.push_back(fp::from_matrix(a.left_mult_matrix(a.basis_vec(k))));
    gens.push_back(fp::from_matrix(a.right_mult_matrix(a.basis_vec(k))));
  }
  auto found = lattice_by_closure(gens, a.dim, p, cap, exec);
  std::vector<Ideal> out;
  for (auto& s : to_subspaces(a.field, a.dim, found, p))
    out.push_back(Ideal{std::move(s), true});
  return out;
}

std::vector<Subspace> enumerate_submodules(const AlgModule& v,
                                           std::uint64_t cap, Exec exec) {
  if (!v.field.is_prime_field())
    throw unsupported_field_error(
        "submodule enumeration is only available over prime fields");
  const std::uint32_t p = v.field.modulus();
  std::vector<fp::Mat> gens;
  for (const auto& m : v.action) gens.push_back(fp::from_matrix(m));
  auto found = lattice_by_closure(gens, v.dim, p, cap, exec);
  return to_subspaces(v.field, v.dim, found, p);
}

std::vector<AlgModule> irreducible_modules_by_exhaustion(const Algebra& a,
                                                         std::uint64_t cap,
                                                         Exec exec) {
  AlgModule reg = regular_module(a);
  auto subs = enumerate_submodules(reg, cap, exec);
  std::vector<AlgModule> out;
  for (const auto& m : subs) {
    if (m.dim() == reg.dim) continue;  // proper only
    bool maximal = true;
    for (const auto& n : subs) {
      if (n.dim() == reg.dim || n.dim() <= m.dim()) continue;
      if (n.contains(m) && !(n == m)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(quotient_module(reg, m));
  }
  return out;
}

}  // namespace pcpw
