// Copyright 2026 The wordlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wordlab/rauzy.hpp"

#include <algorithm>
#include <optional>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

// Verdict of every length-n window, computed once per distinct factor.
struct WindowVerdicts {
  std::vector<std::uint32_t> ids;
  std::vector<std::optional<std::size_t>> frontier;  // by id; empty = open

  bool closed(std::size_t j) const { return frontier[ids[j]].has_value(); }
  std::size_t frontier_at(std::size_t j) const { return *frontier[ids[j]]; }
};

WindowVerdicts classify_windows(const PrefixBuffer& buf, std::size_t n, Classifier classifier) {
  WindowVerdicts out;
  for (const FactorRef& f : buf.index().distinct_factors(n))
    out.frontier.push_back(classifier(buf.view(f)).frontier_len());
  out.ids = buf.index().window_ids(n);
  return out;
}

void require_pairs(const PrefixBuffer& buf, std::size_t n, const char* what) {
  if (n == 0) throw Error(Errc::domain, std::string(what) + ": length must be at least 1");
  if (n > buf.stable_upto())
    throw Error(Errc::uncertified, std::string(what) + ": length " + std::to_string(n) +
                                       " is above the certified range (stable up to " +
                                       std::to_string(buf.stable_upto()) + ")");
  if (n + 1 > buf.size())
    throw Error(Errc::range, std::string(what) + ": buffer of length " +
                                 std::to_string(buf.size()) + " has no two windows of length " +
                                 std::to_string(n));
}

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::vector<std::size_t> RauzyGraph::out_degrees() const {
  std::vector<std::size_t> d(vertices.size(), 0);
  for (const auto& e : edges) ++d[e.source];
  return d;
}

std::vector<std::size_t> RauzyGraph::in_degrees() const {
  std::vector<std::size_t> d(vertices.size(), 0);
  for (const auto& e : edges) ++d[e.target];
  return d;
}

RauzyGraph rauzy_graph(const PrefixBuffer& buf, std::size_t n, bool force) {
  if (n == 0) throw Error(Errc::domain, "Rauzy graph order must be at least 1");
  FactorSet edges = factors_of_length(buf, n + 1, force);
  FactorSet vertices = factors_of_length(buf, n, force);
  RauzyGraph g;
  g.order = n;
  g.vertices = vertices.refs();
  g.edges.reserve(edges.size());
  for (const FactorRef& label : edges) {
    WordView w = buf.view(label);
    auto src = vertices.find(buf, w.first(n));
    auto dst = vertices.find(buf, w.last(n));
    // Every window of a window is a window, so both ends are vertices.
    g.edges.push_back({*src, *dst, label});
  }
  return g;
}

SpecialReport special_factors(const PrefixBuffer& buf, std::size_t n, bool force) {
  RauzyGraph g = rauzy_graph(buf, n, force);
  SpecialReport report;
  report.order = n;
  auto out = g.out_degrees();
  auto in = g.in_degrees();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (in[v] >= 2) report.left_specials.push_back(g.vertices[v]);
    if (out[v] >= 2) report.right_specials.push_back(g.vertices[v]);
  }
  return report;
}

DotDocument rauzy_dot(const PrefixBuffer& buf, const RauzyGraph& graph) {
  DotDocument doc;
  doc.name = "rauzy_" + std::to_string(graph.order);
  auto out = graph.out_degrees();
  auto in = graph.in_degrees();
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    DotNode node;
    node.id = buf.text(graph.vertices[v]);
    ClosureVerdict verdict = classify(buf.view(graph.vertices[v]));
    node.attrs.push_back({"closed", verdict.is_closed() ? "true" : "false"});
    if (verdict.is_closed())
      node.attrs.push_back({"frontier", std::to_string(*verdict.frontier_len())});
    if (in[v] >= 2) node.attrs.push_back({"left_special", "true"});
    if (out[v] >= 2) node.attrs.push_back({"right_special", "true"});
    doc.nodes.push_back(std::move(node));
  }
  for (const auto& e : graph.edges) {
    doc.edges.push_back({buf.text(graph.vertices[e.source]), buf.text(graph.vertices[e.target]),
                         {{"label", buf.text(e.label)}}});
  }
  return doc;
}

std::vector<NeighborViolation> check_closed_neighbor_uniqueness(const PrefixBuffer& buf,
                                                                std::size_t n,
                                                                Classifier classifier) {
  if (n < 2) throw Error(Errc::domain, "neighbor check needs n >= 2");
  FactorSet words = factors_of_length(buf, n);
  FactorSet cores = factors_of_length(buf, n - 1);
  std::vector<std::size_t> pred(cores.size(), 0), succ(cores.size(), 0);
  for (const FactorRef& f : words) {
    WordView w = buf.view(f);
    if (!classifier(w).is_closed()) continue;
    ++pred[*cores.find(buf, w.last(n - 1))];
    ++succ[*cores.find(buf, w.first(n - 1))];
  }
  std::vector<NeighborViolation> out;
  for (std::size_t i = 0; i < cores.size(); ++i)
    if (pred[i] >= 2 || succ[i] >= 2) out.push_back({cores.refs()[i], pred[i], succ[i]});
  return out;
}

std::vector<FrontierViolation> check_frontier_distance(const PrefixBuffer& buf, std::size_t n,
                                                       std::size_t i_max,
                                                       Classifier classifier) {
  if (i_max == 0) throw Error(Errc::domain, "i_max must be at least 1");
  require_pairs(buf, n, "frontier distance check");
  const WindowVerdicts wv = classify_windows(buf, n, classifier);
  const std::size_t windows = wv.ids.size();
  std::vector<FrontierViolation> out;
  for (std::size_t j = 0; j < windows; ++j) {
    if (!wv.closed(j)) continue;
    for (std::size_t i = 1; i <= i_max && j + i < windows; ++i) {
      if (!wv.closed(j + i)) continue;
      const std::size_t f1 = wv.frontier_at(j), f2 = wv.frontier_at(j + i);
      if (abs_diff(f1, f2) >= i) out.push_back({j, i, f1, f2, 0});
    }
  }
  return out;
}

std::vector<FrontierViolation> check_closed_walks(const PrefixBuffer& buf, std::size_t n,
                                                  std::size_t max_walk,
                                                  Classifier classifier) {
  if (max_walk == 0) throw Error(Errc::domain, "walk length must be at least 1");
  require_pairs(buf, n, "closed walk check");
  const WindowVerdicts wv = classify_windows(buf, n, classifier);
  const std::size_t windows = wv.ids.size();
  std::vector<FrontierViolation> out;
  std::vector<std::uint32_t> open_ids;
  for (std::size_t j = 0; j < windows; ++j) {
    if (!wv.closed(j)) continue;
    open_ids.clear();
    for (std::size_t m = 1; m <= max_walk && j + m < windows; ++m) {
      const std::size_t k = j + m;
      if (wv.closed(k)) {
        std::sort(open_ids.begin(), open_ids.end());
        const auto distinct = static_cast<std::size_t>(
            std::unique(open_ids.begin(), open_ids.end()) - open_ids.begin());
        open_ids.resize(distinct);
        const std::size_t f1 = wv.frontier_at(j), f2 = wv.frontier_at(k);
        if (abs_diff(f1, f2) > distinct) out.push_back({j, m, f1, f2, distinct});
      } else {
        open_ids.push_back(wv.ids[k]);
      }
    }
  }
  return out;
}

}  // namespace wordlab
