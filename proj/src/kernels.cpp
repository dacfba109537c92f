#include "geoprove/kernels.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

namespace geoprove::kernels {

namespace {

using Monomial = Polynomial::Monomial;

// Products of a[begin, end) with all of b, sorted descending and combined.
std::vector<Monomial> partial_product(std::span<const Monomial> a, std::span<const Monomial> b,
                                      std::size_t begin, std::size_t end) {
  std::vector<Monomial> out;
  out.reserve((end - begin) * b.size());
  for (std::size_t i = begin; i < end; ++i) {
    for (const Monomial& m : b) out.push_back({a[i].term * m.term, a[i].coeff * m.coeff});
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return x.term > y.term; });
  std::vector<Monomial> combined;
  combined.reserve(out.size());
  for (Monomial& m : out) {
    if (!combined.empty() && combined.back().term == m.term) {
      combined.back().coeff += m.coeff;
      if (combined.back().coeff == 0) combined.pop_back();
    } else {
      combined.push_back(std::move(m));
    }
  }
  return combined;
}

std::vector<Monomial> merge(std::vector<Monomial> a, std::vector<Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].term > b[j].term)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].term > a[i].term) {
      out.push_back(std::move(b[j++]));
    } else {
      a[i].coeff += b[j].coeff;
      if (a[i].coeff != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial multiply_chunked(const Polynomial& a, const Polynomial& b, bool parallel) {
  if (a.is_zero() || b.is_zero()) return {};
  // Chunk over the larger operand.
  std::span<const Monomial> outer = a.monomials();
  std::span<const Monomial> inner = b.monomials();
  if (outer.size() < inner.size()) std::swap(outer, inner);

  const int threads = parallel ? omp_get_max_threads() : 1;
  const std::size_t chunks = std::min<std::size_t>(outer.size(), static_cast<std::size_t>(std::max(threads, 1)));
  if (chunks <= 1) return Polynomial::from_sorted(partial_product(outer, inner, 0, outer.size()));

  std::vector<std::vector<Monomial>> partials(chunks);
  const auto n_chunks = static_cast<long>(chunks);
#pragma omp parallel for schedule(static) if (parallel)
  for (long c = 0; c < n_chunks; ++c) {
    const std::size_t begin = outer.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t end = outer.size() * static_cast<std::size_t>(c + 1) / chunks;
    partials[static_cast<std::size_t>(c)] = partial_product(outer, inner, begin, end);
  }
  // Pairwise tree merge.
  while (partials.size() > 1) {
    std::vector<std::vector<Monomial>> next;
    next.reserve((partials.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < partials.size(); i += 2) {
      next.push_back(merge(std::move(partials[i]), std::move(partials[i + 1])));
    }
    if (partials.size() % 2 == 1) next.push_back(std::move(partials.back()));
    partials = std::move(next);
  }
  return Polynomial::from_sorted(std::move(partials.front()));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  const bool parallel = a.size() * b.size() >= kParallelMultiplyThreshold && omp_get_max_threads() > 1;
  return multiply_chunked(a, b, parallel);
}

Polynomial multiply_reference(const Polynomial& a, const Polynomial& b) {
  std::map<Term, Integer, std::greater<>> acc;
  for (const Monomial& x : a.monomials()) {
    for (const Monomial& y : b.monomials()) acc[x.term * y.term] += x.coeff * y.coeff;
  }
  std::vector<Monomial> out;
  for (auto& [t, c] : acc) {
    if (c != 0) out.push_back({t, c});
  }
  return Polynomial::from_sorted(std::move(out));
}

}  // namespace geoprove::kernels
