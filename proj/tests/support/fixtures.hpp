#pragma once

#include "blp/model.hpp"

#include "builders.hpp"

namespace blp::testing {

/// PATH: dims 0 2 1 1; coupling pins y1 = 1, follower indifferent over
/// y1 + y2 = 2. Bilevel optimum 1 at y = (1, 1).
inline BlpInstance path_instance() {
  BlpInstance inst;
  inst.n = 0;
  inst.m = 2;
  inst.k = 1;
  inst.r = 1;
  inst.c = {};
  inst.d = vec({1, 0});
  inst.q = vec({0, 0});
  inst.A = RatMatrix(1, 0);
  inst.B = mat({{1, 0}});
  inst.a = vec({1});
  inst.T = RatMatrix(1, 0);
  inst.W = mat({{1, 1}});
  inst.h = vec({2});
  return inst;
}

/// COUPLE: dims 1 3 1 1; the coupling row y2 + y3 = x holds on the whole
/// optimal face { y1 = 0, y2 + y3 = x } of the follower, so the pessimistic
/// decision is yes for alpha >= 0 with a certificate whose extended basis
/// has a nonbasic column (the zero-reduced-cost coupling condition bites).
inline BlpInstance couple_instance() {
  BlpInstance inst;
  inst.n = 1;
  inst.m = 3;
  inst.k = 1;
  inst.r = 1;
  inst.c = vec({0});
  inst.d = vec({1, 0, 0});
  inst.q = vec({1, 0, 0});
  inst.A = mat({{-1}});
  inst.B = mat({{0, 1, 1}});
  inst.a = vec({0});
  inst.T = mat({{-1}});
  inst.W = mat({{1, 1, 1}});
  inst.h = vec({0});
  return inst;
}

/// UNIQ: dims 1 2 0 1; lower level min y1 s.t. y1 + y2 = x has the unique
/// optimum y = (0, x); d'y = 0 on every optimum.
inline BlpInstance uniq_instance() {
  BlpInstance inst;
  inst.n = 1;
  inst.m = 2;
  inst.k = 0;
  inst.r = 1;
  inst.c = vec({0});
  inst.d = vec({1, 0});
  inst.q = vec({1, 0});
  inst.A = RatMatrix(0, 1);
  inst.B = RatMatrix(0, 2);
  inst.a = {};
  inst.T = mat({{-1}});
  inst.W = mat({{1, 1}});
  inst.h = vec({0});
  return inst;
}

}  // namespace blp::testing
