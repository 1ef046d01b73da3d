#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "zzq/catalog.hpp"
#include "zzq/error.hpp"
#include "zzq/hom.hpp"
#include "zzq/projective.hpp"

using namespace zzq;

namespace {

AlgebraPtr alg(AlgebraKind kind, int n, std::uint32_t p = 2) { return Algebra::leaf_quotient(n, kind, Field(p)); }

Representation mod(const AlgebraPtr& a, const std::string& label) { return canonical_module(a, parse_label(label)); }

using Dims = std::vector<std::size_t>;

/// The same module in a random basis at every vertex.
Representation scramble(const Representation& m, std::mt19937& rng) {
  const Field& f = m.field();
  std::vector<Mat> g, g_inv;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const std::size_t d = m.dim(v);
    for (;;) {
      Mat x(f, d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) x(r, c) = rng() % f.p();
      if (!is_invertible(x)) continue;
      g.push_back(x);
      g_inv.push_back(*solve(x, Mat::identity(f, d)));
      break;
    }
  }
  std::vector<Mat> maps;
  for (int a = 0; a < static_cast<int>(m.algebra().arrows().size()); ++a) {
    const auto& arrow = m.algebra().arrows()[a];
    maps.push_back(g[arrow.target] * m.map(a) * g_inv[arrow.source]);
  }
  return Representation(m.algebra_ptr(), m.dims(), maps);
}

}  // namespace

TEST_CASE("label grammar") {
  CHECK(parse_label("M(1,3)").str() == "M(1,3)");
  CHECK(parse_label("Delta(2)") == Label::delta(2));
  CHECK_THROWS_AS(parse_label("Q(1)"), InvalidLabel);
  CHECK_THROWS_AS(parse_label("M(1)"), InvalidLabel);
  CHECK_THROWS_AS(parse_label("L(1,2)"), InvalidLabel);
  CHECK_THROWS_AS(parse_label("L(x)"), InvalidLabel);
  CHECK_THROWS_AS(parse_label("L 1"), InvalidLabel);
  auto b3 = alg(AlgebraKind::B, 3);
  CHECK_THROWS_AS(mod(b3, "L(4)"), InvalidLabel);
  CHECK_THROWS_AS(mod(b3, "M(1,2)"), InvalidLabel);  // parity
  CHECK_THROWS_AS(mod(b3, "N(1,3)"), InvalidLabel);
  CHECK_THROWS_AS(mod(b3, "W(2,2)"), InvalidLabel);
  try {
    parse_label("bogus");
  } catch (const InvalidLabel& e) {
    CHECK(std::string(e.what()).find(kLabelGrammar) != std::string::npos);
  }
  CHECK(parse_label("L(2)") < parse_label("P(1)"));
  CHECK(parse_label("S(1,2)") < parse_label("Delta(1)"));
}

TEST_CASE("canonical modules") {
  auto b3 = alg(AlgebraKind::B, 3);
  const auto p3 = mod(b3, "P(3)");
  CHECK(p3.dims() == Dims{0, 1, 1});
  CHECK(top_dims(p3) == Dims{0, 0, 1});
  CHECK(socle_dims(p3) == Dims{0, 1, 0});
  CHECK(is_isomorphic(p3, mod(b3, "Delta(3)")));

  const auto p2 = mod(b3, "P(2)");
  CHECK(p2.dims() == Dims{1, 2, 1});
  CHECK(top_dims(p2) == Dims{0, 1, 0});
  CHECK(socle_dims(p2) == Dims{0, 1, 0});

  CHECK(mod(alg(AlgebraKind::B, 4), "W(2,4)").dims() == Dims{0, 1, 1, 1});
  CHECK(is_isomorphic(mod(b3, "T(2)"), mod(b3, "P(1)")));
  CHECK(is_isomorphic(mod(b3, "T(1)"), mod(b3, "L(1)")));
  CHECK(is_isomorphic(mod(b3, "Delta(1)"), mod(b3, "L(1)")));
  CHECK(is_isomorphic(mod(b3, "Nabla(1)"), mod(b3, "L(1)")));

  // Delta(i) has top L(i) and socle L(i-1)
  for (int i = 2; i <= 3; ++i) {
    const auto d = canonical_module(b3, Label::delta(i));
    Dims top(3, 0), soc(3, 0);
    top[i - 1] = 1;
    soc[i - 2] = 1;
    CHECK(top_dims(d) == top);
    CHECK(socle_dims(d) == soc);
  }

  auto c3 = alg(AlgebraKind::C, 3);
  CHECK(is_isomorphic(mod(c3, "P(1)"), mod(c3, "S(1,2)")));
  CHECK(is_isomorphic(mod(c3, "P(3)"), mod(c3, "N(2,3)")));
}

TEST_CASE("string modules have interval dimension vectors and satisfy the relations") {
  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C})
    for (int n = 2; n <= 6; ++n) {
      auto a = alg(kind, n, 3);
      for (const auto& label : catalog_labels(*a)) {
        const auto m = canonical_module(a, label);
        CHECK(m.satisfies_relations());
        if (label.two_indices()) {
          Dims d(static_cast<std::size_t>(n), 0);
          for (int v = label.i; v <= label.j; ++v) d[v - 1] = 1;
          CHECK(m.dims() == d);
        }
      }
    }
}

TEST_CASE("dual_star") {
  auto b3 = alg(AlgebraKind::B, 3);
  for (int v = 1; v <= 3; ++v) {
    CHECK(is_isomorphic(dual_star(canonical_module(b3, Label::simple(v))), canonical_module(b3, Label::simple(v))));
    CHECK(is_isomorphic(dual_star(canonical_module(b3, Label::projective(v))),
                        canonical_module(b3, Label::injective(v))));
  }
  for (int i = 2; i <= 3; ++i)
    CHECK(is_isomorphic(dual_star(canonical_module(b3, Label::delta(i))), canonical_module(b3, Label::nabla(i))));
  CHECK(is_isomorphic(mod(b3, "P(2)"), dual_star(mod(b3, "P(2)"))));

  for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C}) {
    auto a = alg(kind, 4);
    Catalog cat(a);
    for (const auto& x : cat.entries()) {
      const auto dd = dual_star(dual_star(x.module));
      CHECK(dd.dims() == x.module.dims());
      CHECK(dd.maps() == x.module.maps());
      CHECK(cat.identify(dual_star(x.module)).has_value());
      for (const auto& y : cat.entries())
        CHECK(hom_dim(x.module, y.module) == hom_dim(dual_star(y.module), dual_star(x.module)));
    }
  }
}

TEST_CASE("twist_alpha") {
  auto c4 = alg(AlgebraKind::C, 4);
  CHECK(is_isomorphic(twist_alpha(mod(c4, "N(1,2)")), mod(c4, "S(3,4)")));
  CHECK(is_isomorphic(twist_alpha(mod(c4, "P(2)")), mod(c4, "P(3)")));
  CHECK_THROWS_AS(twist_alpha(mod(alg(AlgebraKind::B, 4), "L(1)")), UnsupportedKind);

  Catalog cat(c4);
  std::set<Label> images;
  for (const auto& e : cat.entries()) {
    CHECK(is_isomorphic(twist_alpha(twist_alpha(e.module)), e.module));
    const auto image = cat.identify(twist_alpha(e.module));
    REQUIRE(image.has_value());
    images.insert(*image);
    const Label& l = e.label;
    const int n = 4;
    if (l.family == Family::N) CHECK(*image == Label::string(Family::S, n + 1 - l.j, n + 1 - l.i));
    if (l.family == Family::S) CHECK(*image == Label::string(Family::N, n + 1 - l.j, n + 1 - l.i));
    if (l.family == Family::M || l.family == Family::W)
      CHECK(*image == Label::string(l.family, n + 1 - l.j, n + 1 - l.i));
  }
  CHECK(images.size() == cat.size());
}

TEST_CASE("direct sums") {
  auto b3 = alg(AlgebraKind::B, 3);
  std::vector<Representation> parts{mod(b3, "P(1)"), mod(b3, "P(3)")};
  // P(1) has dimension vector (2,1,0), P(3) has (0,1,1)
  CHECK(parts[0].dims() == Dims{2, 1, 0});
  const auto sum = direct_sum(parts);
  CHECK(sum.dims() == Dims{2, 2, 1});
  CHECK(sum.satisfies_relations());
  std::vector<Representation> one{mod(b3, "W(1,3)")};
  CHECK(is_isomorphic(direct_sum(one), one[0]));
  CHECK(direct_sum(b3, std::span<const Representation>{}).is_zero());
  std::vector<Representation> mixed{mod(b3, "L(1)"), mod(alg(AlgebraKind::B, 3), "L(1)")};
  CHECK_THROWS_AS(direct_sum(mixed), ContractViolation);
}

TEST_CASE("decomposition and indecomposability") {
  auto b3 = alg(AlgebraKind::B, 3);
  Catalog cat(b3);
  std::vector<Representation> parts{mod(b3, "P(1)"), mod(b3, "P(2)")};
  CHECK(cat.decompose_labels(direct_sum(parts)) == std::vector<Label>{Label::projective(1), Label::projective(2)});
  for (const auto& e : cat.entries()) CHECK(cat.decompose_labels(e.module) == std::vector<Label>{e.label});

  CHECK(is_indecomposable(mod(b3, "L(1)")));
  CHECK(is_indecomposable(mod(b3, "W(1,3)")));
  std::vector<Representation> pl{mod(b3, "P(1)"), mod(b3, "L(1)")};
  CHECK_FALSE(is_indecomposable(direct_sum(pl)));

  // A sum of three copies of a module with the same simple twice
  std::vector<Representation> rep{mod(b3, "L(2)"), mod(b3, "M(1,3)"), mod(b3, "L(2)"), mod(b3, "N(2,3)")};
  CHECK(cat.decompose_labels(direct_sum(rep)) ==
        std::vector<Label>{Label::simple(2), Label::simple(2), Label::string(Family::M, 1, 3),
                           Label::string(Family::N, 2, 3)});
}

TEST_CASE("isomorphism examples") {
  auto b3 = alg(AlgebraKind::B, 3);
  CHECK(is_isomorphic(mod(b3, "W(1,3)"), mod(b3, "W(1,3)")));
  CHECK_FALSE(is_isomorphic(mod(b3, "Delta(2)"), mod(b3, "Nabla(2)")));
  CHECK(hom_dim(mod(b3, "Delta(2)"), mod(b3, "Nabla(2)")) > 0);
  CHECK_THROWS_AS(is_isomorphic(mod(b3, "L(1)"), mod(alg(AlgebraKind::B, 3), "L(1)")), ContractViolation);
}

TEST_CASE("identify") {
  auto b3 = alg(AlgebraKind::B, 3);
  Catalog cat(b3);
  const auto p2 = mod(b3, "P(2)");
  CHECK(cat.identify(radical(p2).module) == Label::string(Family::W, 1, 3));
  CHECK(cat.identify(socle(p2).module) == Label::simple(2));
  CHECK(cat.identify(mod(b3, "Delta(1)")) == Label::simple(1));
  CHECK(cat.canonical(Label::projective(3)) == Label::string(Family::N, 2, 3));
  CHECK(cat.canonical(Label::delta(2)) == Label::string(Family::N, 1, 2));
  CHECK(cat.canonical(Label::nabla(3)) == Label::string(Family::S, 2, 3));
  CHECK(display_name(*b3, Label::string(Family::N, 1, 2)) == "Delta(2)");
  CHECK(display_name(*b3, Label::string(Family::S, 2, 3)) == "Nabla(3)");
  CHECK(display_name(*alg(AlgebraKind::C, 3), Label::string(Family::S, 2, 3)) == "S(2,3)");
}

TEST_CASE("catalog sizes") {
  CHECK(Catalog(alg(AlgebraKind::A, 3)).size() == 12);
  CHECK(Catalog(alg(AlgebraKind::B, 3)).size() == 11);
  CHECK(Catalog(alg(AlgebraKind::C, 3)).size() == 10);
  for (int n = 2; n <= 7; ++n) {
    const std::size_t full = static_cast<std::size_t>(n * (n + 1));
    CHECK(Catalog(alg(AlgebraKind::A, n)).size() == full);
    CHECK(Catalog(alg(AlgebraKind::B, n)).size() == full - 1);
    CHECK(Catalog(alg(AlgebraKind::C, n)).size() == full - 2);
  }
  CHECK_THROWS_AS(Catalog(Algebra::zigzag(Graph{3, {{0, 1}, {1, 2}, {0, 2}}}, Field(2))), UnsupportedKind);
}

TEST_CASE("catalog against brute-force oracles over GF(2) and GF(3)") {
  for (std::uint32_t p : {2u, 3u})
    for (AlgebraKind kind : {AlgebraKind::A, AlgebraKind::B, AlgebraKind::C})
      for (int n = 2; n <= 3; ++n) {
        auto a = alg(kind, n, p);
        Catalog cat(a);
        CAPTURE(a->descriptor());
        for (const auto& x : cat.entries()) {
          CAPTURE(x.label.str());
          const long long idem = oracle::idempotent_count(x.module);
          REQUIRE(idem >= 0);
          CHECK(idem == 2);
          for (const auto& y : cat.entries()) {
            const long long homs = oracle::hom_count(x.module, y.module);
            REQUIRE(homs > 0);
            CHECK(hom_dim(x.module, y.module) == std::size_t(oracle::log_p(homs, p)));
            if (x.label != y.label) {
              CHECK(oracle::isomorphic(x.module, y.module) == 0);
              CHECK_FALSE(is_isomorphic(x.module, y.module));
            }
          }
        }
      }
}

TEST_CASE("scrambled bases") {
  auto c4 = alg(AlgebraKind::C, 4, 5);
  Catalog cat(c4);
  std::mt19937 rng(11);
  for (const auto& e : cat.entries()) {
    const auto s = scramble(e.module, rng);
    CHECK(s.satisfies_relations());
    CHECK(cat.identify(s) == e.label);
  }
}

TEST_CASE("decomposition of random direct sums matches the parts") {
  auto b4 = alg(AlgebraKind::B, 4, 3);
  Catalog cat(b4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Representation> parts;
    std::vector<Label> expected;
    const int count = 1 + trial % 4;
    for (int k = 0; k < count; ++k) {
      const auto& e = cat.entries()[rng() % cat.size()];
      parts.push_back(e.module);
      expected.push_back(e.label);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(cat.decompose_labels(scramble(direct_sum(parts), rng)) == expected);
  }
}
