#include "hassepaths/order.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <utility>
#include <vector>

using namespace hassepaths;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_edges(const EdgeSet& es) {
  auto e = es.edges;
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("rewrite covers agree with transitive reduction of the order") {
  for (PathClass c : all_classes()) {
    const ClassSpec& spec = class_spec(c);
    const int top = spec.grand() ? 4 : 5;
    for (long n = 0; n <= top; ++n) {
      CAPTURE(spec.code, n);
      const EdgeSet via_order = covers_by_order(spec, n);
      const EdgeSet via_rewrite = covers_from_rewrites(spec, n);
      REQUIRE(via_order.elements == via_rewrite.elements);
      CHECK(sorted_edges(via_order) == sorted_edges(via_rewrite));
    }
  }
}

TEST_CASE("frozen cover relations at small sizes") {
  SECTION("DD_2 is a two-element chain") {
    const EdgeSet es = covers_by_order(class_spec(PathClass::Dyck), 2);
    REQUIRE(es.elements.size() == 2);
    CHECK(es.elements[0].str() == "UUDD");
    CHECK(es.elements[1].str() == "UDUD");
    REQUIRE(es.edges.size() == 1);
    CHECK(es.edges[0] == std::pair<std::uint32_t, std::uint32_t>{1, 0});
  }

  SECTION("FF_3 is a vee from the all-flat word") {
    const ClassSpec& spec = class_spec(PathClass::Fibonacci);
    const EdgeSet es = covers_by_order(spec, 3);
    REQUIRE(es.elements.size() == 3);
    CHECK(es.elements[0].str() == "UDH");
    CHECK(es.elements[1].str() == "HUD");
    CHECK(es.elements[2].str() == "HHH");
    const auto edges = sorted_edges(es);
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == std::pair<std::uint32_t, std::uint32_t>{2, 0});
    CHECK(edges[1] == std::pair<std::uint32_t, std::uint32_t>{2, 1});
    const PathWord bottom = parse_path("HHH", spec);
    const auto ups = covers_by_rewrite(bottom, spec);
    REQUIRE(ups.size() == 2);
    CHECK(ups[0].str() == "UDH");
    CHECK(ups[1].str() == "HUD");
  }

  SECTION("single-word classes have no edges") {
    for (PathClass c : all_classes()) {
      const EdgeSet es = covers_by_order(class_spec(c), 0);
      CHECK(es.elements.size() == 1);
      CHECK(es.edges.empty());
    }
  }
}

TEST_CASE("cover statistics count rewrite neighbours") {
  for (PathClass c : all_classes()) {
    const ClassSpec& spec = class_spec(c);
    for (long n = 0; n <= (spec.grand() ? 4 : 5); ++n) {
      for (const PathWord& w : enumerate_class(spec, n)) {
        CAPTURE(spec.code, n, w.str());
        CHECK(delta_count(w, spec) ==
              static_cast<long>(covers_by_rewrite(w, spec).size()));
        CHECK(nabla_count(w, spec) ==
              static_cast<long>(covered_by_rewrite(w, spec).size()));
      }
    }
  }
}

TEST_CASE("edge counts by enumeration match the closed forms") {
  for (PathClass c : all_classes()) {
    const ClassSpec& spec = class_spec(c);
    const int top = std::min(default_enumeration_cap(c), 7);
    for (long n = 0; n <= top; ++n) {
      CAPTURE(spec.code, n);
      const BigInt by_delta = edge_count_enum(spec, n);
      CHECK(by_delta == edge_count_formula(c, n));
      CHECK(by_delta == edge_count_enum_nabla(spec, n));
    }
  }
}

TEST_CASE("histogram polynomials carry vertex and edge counts") {
  for (PathClass c : all_classes()) {
    const ClassSpec& spec = class_spec(c);
    const int top = std::min(default_enumeration_cap(c), 6);
    for (long n = 0; n <= top; ++n) {
      CAPTURE(spec.code, n);
      const DeltaPolynomial dp = delta_polynomial_enum(spec, n);
      const DeltaPolynomial np = nabla_polynomial_enum(spec, n);
      CHECK(dp.total() == vertex_count(c, n));
      CHECK(np.total() == vertex_count(c, n));
      CHECK(dp.weighted_total() == edge_count_formula(c, n));
      CHECK(np.weighted_total() == edge_count_formula(c, n));
    }
  }
}

TEST_CASE("frozen histogram polynomials") {
  CHECK(delta_polynomial_enum(class_spec(PathClass::Motzkin), 2).str() == "1 + q");
  const DeltaPolynomial dyck3 = delta_polynomial_enum(class_spec(PathClass::Dyck), 3);
  CHECK(dyck3 == DeltaPolynomial(std::vector<BigInt>{1, 3, 1}));
  CHECK(dyck3.str() == "1 + 3q + q^2");
  CHECK(DeltaPolynomial().str() == "0");
}

TEST_CASE("the order is reflexive, antisymmetric and transitive") {
  const ClassSpec& spec = class_spec(PathClass::Motzkin);
  const auto words = enumerate_class(spec, 4);
  for (const PathWord& a : words) {
    CHECK(below(a, a, spec));
    for (const PathWord& b : words) {
      if (below(a, b, spec) && below(b, a, spec)) CHECK(a == b);
      for (const PathWord& c : words)
        if (below(a, b, spec) && below(b, c, spec)) CHECK(below(a, c, spec));
    }
  }
  CHECK_THROWS_AS(below(parse_path("UD", class_spec(PathClass::Dyck)),
                        parse_path("UUDD", class_spec(PathClass::Dyck)),
                        class_spec(PathClass::Dyck)),
                  std::invalid_argument);
}

TEST_CASE("meet and join are greatest lower and least upper bounds") {
  const std::vector<std::pair<PathClass, long>> cases = {
      {PathClass::Dyck, 5},     {PathClass::GrandDyck, 4},
      {PathClass::Motzkin, 5},  {PathClass::GrandMotzkin, 4},
      {PathClass::Schroeder, 4}, {PathClass::GrandSchroeder, 3},
  };
  for (const auto& [c, n] : cases) {
    const ClassSpec& spec = class_spec(c);
    const auto words = enumerate_class(spec, n);
    CAPTURE(spec.code, n);
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = i; j < words.size(); ++j) {
        const PathWord& a = words[i];
        const PathWord& b = words[j];
        const PathWord m = meet(a, b, spec);
        const PathWord v = join(a, b, spec);
        REQUIRE(validate(spec, m).ok);
        REQUIRE(validate(spec, v).ok);
        CHECK(below(m, a, spec));
        CHECK(below(m, b, spec));
        CHECK(below(a, v, spec));
        CHECK(below(b, v, spec));
        CHECK(meet(b, a, spec) == m);
        CHECK(join(a, v, spec) == v);   // absorption-style sanity
        CHECK(meet(a, m, spec) == m);
        for (const PathWord& w : words) {
          if (below(w, a, spec) && below(w, b, spec)) CHECK(below(w, m, spec));
          if (below(a, w, spec) && below(b, w, spec)) CHECK(below(v, w, spec));
        }
      }
    }
  }
}

TEST_CASE("meet and join reject the strip classes and width mismatches") {
  const ClassSpec& ff = class_spec(PathClass::Fibonacci);
  CHECK_THROWS_AS(meet(parse_path("UDH", ff), parse_path("HHH", ff), ff),
                  std::invalid_argument);
  const ClassSpec& gf = class_spec(PathClass::GrandFibonacci);
  CHECK_THROWS_AS(join(parse_path("UD", gf), parse_path("DU", gf), gf),
                  std::invalid_argument);
  const ClassSpec& dd = class_spec(PathClass::Dyck);
  CHECK_THROWS_AS(meet(parse_path("UD", dd), parse_path("UUDD", dd), dd),
                  std::invalid_argument);
}

TEST_CASE("reflection is an order anti-automorphism of the grand classes") {
  for (PathClass c : {PathClass::GrandDyck, PathClass::GrandMotzkin,
                      PathClass::GrandSchroeder, PathClass::GrandFibonacci}) {
    const ClassSpec& spec = class_spec(c);
    const long n = c == PathClass::GrandSchroeder ? 3 : 4;
    const auto words = enumerate_class(spec, n);
    CAPTURE(spec.code);
    for (const PathWord& w : words) {
      const PathWord r = reflect(w);
      REQUIRE(validate(spec, r).ok);
      CHECK(delta_count(w, spec) == nabla_count(r, spec));
    }
    for (const PathWord& a : words)
      for (const PathWord& b : words)
        CHECK(below(a, b, spec) == below(reflect(b), reflect(a), spec));
  }
}

TEST_CASE("computation caps guard the brute-force routes") {
  const ClassSpec& dd = class_spec(PathClass::Dyck);
  CHECK_THROWS_AS(covers_by_order(dd, 8), CapExceeded);
  CHECK_THROWS_AS(edge_count_enum(dd, 11), CapExceeded);
  CHECK_THROWS_AS(delta_polynomial_enum(class_spec(PathClass::GrandSchroeder), 9),
                  CapExceeded);
  CHECK(edge_count_enum(dd, 11, /*force=*/true) ==
        edge_count_formula(PathClass::Dyck, 11));
  const EdgeSet forced = covers_by_order(dd, 8, /*force=*/true);
  CHECK(forced.edges.size() == 5005);  // matches the closed form at n = 8
}

TEST_CASE("order-route edge totals equal the closed forms") {
  for (PathClass c : all_classes()) {
    const ClassSpec& spec = class_spec(c);
    const int top = std::min(default_order_cap(c), spec.grand() ? 4 : 5);
    for (long n = 0; n <= top; ++n) {
      CAPTURE(spec.code, n);
      const EdgeSet es = covers_by_order(spec, n);
      CHECK(BigInt(es.edges.size()) == edge_count_formula(c, n));
      CHECK(BigInt(es.elements.size()) == vertex_count(c, n));
    }
  }
}

TEST_CASE("edge set exports") {
  const ClassSpec& dd = class_spec(PathClass::Dyck);
  const EdgeSet es = covers_by_order(dd, 2);
  CHECK(edge_set_csv(es) == "lower,upper\nUDUD,UUDD\n");
  CHECK(edge_set_json(dd, 2, es) ==
        "{\"class\":\"DD\",\"n\":2,\"elements\":[\"UUDD\",\"UDUD\"],"
        "\"edges\":[[1,0]]}");
}

TEST_CASE("hasse summary combines the closed-form routes") {
  const HasseSummary s = hasse_summary(PathClass::GrandDyck, 9);
  CHECK(s.vertices == binomial(18, 9));
  CHECK(s.edges == 218790);
  CHECK(s.index == Rational(9, 2));
  const HasseSummary d = hasse_summary(PathClass::Dyck, 9);
  CHECK(d.index == Rational(4));  // (n-1)/2 at n = 9
}
