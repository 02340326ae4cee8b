#pragma once

#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "p1inv/error.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/graph.hpp"

#define CHECK_ERROR_KIND(expr, k)                       \
  do {                                                  \
    bool thrown_ = false;                               \
    try {                                               \
      (void)(expr);                                     \
    } catch (const p1inv::Error& e_) {                  \
      thrown_ = true;                                   \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());       \
    }                                                   \
    CHECK_MESSAGE(thrown_, "expected " #k " from " #expr); \
  } while (0)

namespace testing {

inline std::vector<std::pair<int, int>> pairs(const p1inv::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.tail, e.head);
  return out;
}

inline p1inv::Configuration to_config(const std::vector<oracle::Pt>& pts) {
  std::vector<p1inv::ProjectivePoint> out;
  for (const auto& p : pts) {
    out.push_back(p.inf ? p1inv::ProjectivePoint::infinity() : p1inv::ProjectivePoint::affine(p.x));
  }
  return p1inv::Configuration(std::move(out));
}

inline std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

}  // namespace testing
