// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "hyperci/joins.hpp"

using hyperci::Form;
using hyperci::JoinSpec;
using hyperci::Partition;
using hyperci::PrimeField;
using hyperci::SplitMix64;
using hyperci::defect;
using hyperci::join_dim;
using hyperci::reducible_dim;
using hyperci::secant_dim;
using hyperci::tangent_dim;

namespace {
const PrimeField kF(2147483647u);

long long ambient_dim(int n, int d) {
  return static_cast<long long>(hyperci::monomial_count(n, d)) - 1;
}
}  // namespace

TEST_CASE("partition basics") {
  const Partition p(std::vector<int>{1, 3});
  CHECK(p.parts() == std::vector<int>{3, 1});
  CHECK(p.str() == "3+1");
  CHECK(p.size() == 2);
  CHECK(p.total() == 4);
  CHECK(p == Partition(std::vector<int>{3, 1}));
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
}

TEST_CASE("join spec validation") {
  const Partition p13(std::vector<int>{1, 3});
  const Partition p22(std::vector<int>{2, 2});
  const Partition p3(std::vector<int>{3});
  CHECK(JoinSpec(3, {p13, p22}).degree() == 4);
  CHECK_THROWS_AS(JoinSpec(0, {p13}), std::invalid_argument);
  CHECK_THROWS_AS(JoinSpec(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(JoinSpec(3, {p13, p3}), std::invalid_argument);
}

TEST_CASE("reducible variety dimensions") {
  CHECK(reducible_dim(Partition(std::vector<int>{1, 3}), 3) == 22);
  CHECK(reducible_dim(Partition(std::vector<int>{4}), 3) == 34);
  CHECK(reducible_dim(Partition(std::vector<int>{1, 1}), 2) == 4);
  CHECK(reducible_dim(Partition(std::vector<int>{2, 2}), 2) == 10);
  CHECK(reducible_dim(Partition(std::vector<int>{1, 1, 1}), 1) == 3);
  CHECK_THROWS_AS(reducible_dim(Partition(std::vector<int>{2}), 0), std::invalid_argument);
}

TEST_CASE("tangent dimension at generic points matches the variety dimension") {
  SplitMix64 rng(31);
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {3, {1, 3}}, {2, {2, 2}}, {2, {1, 1}}, {2, {2}}, {3, {1, 1, 2}}, {1, {2, 3}}};
  for (const auto& [n, parts] : cases) {
    const Partition lambda(parts);
    std::vector<Form> factors;
    for (int a : lambda.parts()) {
      factors.push_back(Form::random(n, a, rng.next(), kF));
    }
    CHECK(tangent_dim(factors) == reducible_dim(lambda, n));
  }
}

TEST_CASE("tangent dimension drops at a doubled factor") {
  const Form f = Form::random(2, 2, 11, kF);
  const std::vector<Form> factors{f, f};
  CHECK(tangent_dim(factors) == 5);
  CHECK(reducible_dim(Partition(std::vector<int>{2, 2}), 2) == 10);
}

TEST_CASE("tangent dimension input validation") {
  CHECK_THROWS_AS(tangent_dim(std::vector<Form>{}), std::invalid_argument);
  const std::vector<Form> with_zero{Form::random(2, 1, 1, kF), Form(2, 2, kF)};
  CHECK_THROWS_AS(tangent_dim(with_zero), std::invalid_argument);
}

TEST_CASE("chordal variety of plane-cubic unions in P3") {
  const Partition p13(std::vector<int>{1, 3});
  CHECK(secant_dim(p13, 2, 3, 2, 0, kF) == 33);
  CHECK(ambient_dim(3, 4) == 34);
  CHECK(defect(p13, 3, 2, 0, kF) == 12);
}

TEST_CASE("four plane-quintic unions fill the space of sextic threefolds") {
  const Partition p15(std::vector<int>{1, 5});
  const JoinSpec spec(5, std::vector<Partition>(4, p15));
  CHECK(join_dim(spec, 2, 0, kF) == 461);
  CHECK(ambient_dim(5, 6) == 461);
}

TEST_CASE("split conics in the plane") {
  const Partition p11(std::vector<int>{1, 1});
  CHECK(secant_dim(p11, 2, 2, 2, 0, kF) == 5);
  CHECK(defect(p11, 2, 2, 0, kF) == 4);
}

TEST_CASE("secant defect of the full quartic space") {
  const Partition p4(std::vector<int>{4});
  CHECK(secant_dim(p4, 2, 3, 2, 0, kF) == 34);
  CHECK(defect(p4, 3, 2, 0, kF) == 35);
}

TEST_CASE("mixed joins accept different partitions of the same degree") {
  const Partition p13(std::vector<int>{1, 3});
  const Partition p22(std::vector<int>{2, 2});
  const JoinSpec spec(2, {p13, p22});
  const long long dim = join_dim(spec, 2, 0, kF);
  CHECK(dim >= reducible_dim(p13, 2));
  CHECK(dim >= reducible_dim(p22, 2));
  CHECK(dim <= ambient_dim(2, 4));
}

TEST_CASE("secant dimensions grow with the number of points") {
  const Partition p12(std::vector<int>{1, 2});
  long long prev = reducible_dim(p12, 2);
  for (int k = 1; k <= 3; ++k) {
    const long long cur = secant_dim(p12, k, 2, 2, 5, kF);
    CHECK(cur >= prev);
    CHECK(cur <= ambient_dim(2, 3));
    CHECK(cur <= static_cast<long long>(k) * (reducible_dim(p12, 2) + 1) - 1);
    prev = cur;
  }
}

TEST_CASE("join dimensions are reproducible") {
  const Partition p13(std::vector<int>{1, 3});
  const JoinSpec spec(3, {p13, p13});
  const long long a = join_dim(spec, 3, 42, kF);
  const long long b = join_dim(spec, 3, 42, kF);
  CHECK(a == b);
  CHECK(join_dim(spec, 3, 42, kF) >= join_dim(spec, 1, 42, kF));
}

TEST_CASE("join argument validation") {
  const Partition p2(std::vector<int>{2});
  CHECK_THROWS_AS(join_dim(JoinSpec(2, {p2}), 0, 0, kF), std::invalid_argument);
  CHECK_THROWS_AS(secant_dim(p2, 0, 2, 1, 0, kF), std::invalid_argument);
}
