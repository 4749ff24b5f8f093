#include "atk/grouppres/epimorphisms.hpp"

#include <algorithm>
#include <cstdint>

#include "atk/error.hpp"

namespace atk {
namespace {

constexpr std::uint64_t kSearchLimit = 200'000'000;

std::uint64_t search_size(std::size_t m, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kSearchLimit / std::max<std::size_t>(m, 1)) return kSearchLimit + 1;
    total *= m;
  }
  return total;
}

std::vector<std::size_t> decode(std::uint64_t idx, std::size_t m, std::size_t n) {
  // most significant digit is generator 0, so idx order is lexicographic
  std::vector<std::size_t> t(n);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = static_cast<std::size_t>(idx % m);
    idx /= m;
  }
  return t;
}

std::vector<FiniteQuotient> dedup(std::vector<FiniteQuotient> found, const FiniteGroup& g) {
  const auto autos = automorphisms(g);
  std::vector<FiniteQuotient> out;
  for (auto& q : found) {
    bool canonical = true;
    for (const auto& a : autos) {
      std::vector<std::size_t> moved(q.images.size());
      for (std::size_t i = 0; i < q.images.size(); ++i) moved[i] = a[q.images[i]];
      if (moved < q.images) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(std::move(q));
  }
  return out;
}

std::vector<FiniteQuotient> enumerate(const Presentation& p, std::shared_ptr<const FiniteGroup> g,
                                      const EpimorphismOptions& options, bool parallel) {
  if (!g) throw Error(ErrorKind::InvalidInput, "no target group");
  const std::size_t m = g->order();
  if (m > options.order_bound) {
    throw Error(ErrorKind::BoundExceeded, "group order " + std::to_string(m) +
                                              " exceeds the bound " +
                                              std::to_string(options.order_bound));
  }
  const std::size_t n = p.generator_count();
  const std::uint64_t total = search_size(m, n);
  if (total > kSearchLimit) {
    throw Error(ErrorKind::BoundExceeded, "search space |G|^n is too large");
  }

  std::vector<std::vector<std::size_t>> hits;
  const std::int64_t count = static_cast<std::int64_t>(total);
#pragma omp parallel if (parallel)
  {
    std::vector<std::vector<std::size_t>> local;
    FiniteQuotient q{g, {}};
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < count; ++idx) {
      q.images = decode(static_cast<std::uint64_t>(idx), m, n);
      if (q.respects(p) && q.is_surjective()) local.push_back(q.images);
    }
#pragma omp critical(atk_epimorphisms)
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());

  std::vector<FiniteQuotient> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(FiniteQuotient{g, std::move(h)});
  if (options.dedup_automorphisms) out = dedup(std::move(out), *g);
  return out;
}

}  // namespace

std::vector<FiniteQuotient> enumerate_epimorphisms(const Presentation& p,
                                                   std::shared_ptr<const FiniteGroup> g,
                                                   const EpimorphismOptions& options) {
  return enumerate(p, std::move(g), options, true);
}

std::vector<FiniteQuotient> enumerate_epimorphisms_serial(const Presentation& p,
                                                          std::shared_ptr<const FiniteGroup> g,
                                                          const EpimorphismOptions& options) {
  return enumerate(p, std::move(g), options, false);
}

std::vector<std::vector<std::size_t>> automorphisms(const FiniteGroup& g) {
  const std::size_t m = g.order();
  std::vector<std::size_t> gens;
  while (g.generated_subgroup(gens).size() < m) {
    const auto sub = g.generated_subgroup(gens);
    for (std::size_t x = 0; x < m; ++x) {
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        gens.push_back(x);
        break;
      }
    }
  }

  std::vector<std::vector<std::size_t>> out;
  const std::uint64_t total = search_size(m, gens.size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto img = decode(idx, m, gens.size());
    std::vector<std::size_t> phi(m, m);
    phi[0] = 0;
    std::vector<std::size_t> frontier{0};
    bool ok = true;
    while (ok && !frontier.empty()) {
      std::size_t x = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const std::size_t y = g.multiply(x, gens[k]);
        const std::size_t fy = g.multiply(phi[x], img[k]);
        if (phi[y] == m) {
          phi[y] = fy;
          frontier.push_back(y);
        } else if (phi[y] != fy) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(m, false);
    for (auto v : phi) hit[v] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
    for (std::size_t a = 0; a < m && ok; ++a)
      for (std::size_t b = 0; b < m && ok; ++b)
        ok = phi[g.multiply(a, b)] == g.multiply(phi[a], phi[b]);
    if (ok) out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace atk
