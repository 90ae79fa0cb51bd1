// Copyright 2026 The tricount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tricount/streaming.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tricount/error.hpp"
#include "tricount/io.hpp"

namespace tricount {

void GraphEdgeStream::do_replay(StreamVisitor& visitor) {
  for (std::uint64_t ui = 0; ui < g_.n(); ++ui) {
    const auto u = static_cast<VertexId>(ui);
    auto list = g_.neighbors_unchecked(u);
    visitor.begin_vertex(u, list.size());
    for (VertexId v : list) visitor.neighbor(u, v);
    visitor.end_vertex(u);
  }
}

namespace {

// Sequential little-endian u64 reader over a file with a fixed buffer.
class U64Reader {
 public:
  explicit U64Reader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open " + path.string());
  }

  std::uint64_t next() {
    if (pos_ + 8 > len_) refill();
    std::uint64_t value = 0;
    for (int i = 7; i >= 0; --i) {
      value = (value << 8) | static_cast<unsigned char>(buffer_[pos_ + i]);
    }
    pos_ += 8;
    return value;
  }

 private:
  void refill() {
    const std::size_t rest = len_ - pos_;
    std::copy(buffer_.begin() + pos_, buffer_.begin() + len_, buffer_.begin());
    in_.read(buffer_.data() + rest, static_cast<std::streamsize>(buffer_.size() - rest));
    len_ = rest + static_cast<std::size_t>(in_.gcount());
    pos_ = 0;
    if (len_ < 8) throw IoError("truncated binary adjacency stream");
  }

  std::ifstream in_;
  std::array<char, 1 << 16> buffer_{};
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
};

}  // namespace

BinaryFileEdgeStream::BinaryFileEdgeStream(std::filesystem::path path)
    : path_(std::move(path)) {
  U64Reader reader(path_);
  n_ = reader.next();
  if (n_ > 0xffffffffull) throw IoError("vertex count exceeds 32-bit range");
}

void BinaryFileEdgeStream::do_replay(StreamVisitor& visitor) {
  U64Reader reader(path_);
  if (reader.next() != n_) throw IoError("stream header changed between passes");
  for (std::uint64_t ui = 0; ui < n_; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    const std::uint64_t len = reader.next();
    visitor.begin_vertex(u, len);
    for (std::uint64_t i = 0; i < len; ++i) {
      const std::uint64_t v = reader.next();
      if (v >= n_) throw IoError("neighbor id out of range in stream");
      visitor.neighbor(u, static_cast<VertexId>(v));
    }
    visitor.end_vertex(u);
  }
}

std::vector<VertexId> HeavyCandidates::heavy_set() const {
  if (!confirmed) return sampled;
  std::vector<VertexId> out;
  out.reserve(confirmed->size());
  for (auto [v, deg] : *confirmed) out.push_back(v);
  return out;
}

std::uint64_t heavy_sample_size(std::uint64_t m, std::uint64_t n, double d) {
  if (m == 0 || n < 2) return 0;
  const double k = d * std::sqrt(static_cast<double>(m)) * std::log(static_cast<double>(n));
  return std::min<std::uint64_t>(m, static_cast<std::uint64_t>(std::ceil(k)));
}

namespace {

std::uint64_t edge_key(Edge e) { return (static_cast<std::uint64_t>(e.u) << 32) | e.v; }

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Bottom-k priority reservoir for an unknown stream length. The edge at
// position i (1-based) is admitted when its priority falls below
// tau(i) = min(1, (2 d sqrt(i) ln n + 64) / i), about twice the rate the
// final sample needs plus slack for small k; tau never increases, so at the
// end the stored set is exactly every edge with priority below tau(m). Its
// k smallest priorities form a uniform k-subset of all m edges whenever at
// least k were stored, which fails only with negligible probability.
class HeavyPass : public StreamVisitor {
 public:
  HeavyPass(std::uint64_t n, double d, SeededRng& rng)
      : ln_n_(n > 1 ? std::log(static_cast<double>(n)) : 0.0), d_(d), rng_(rng) {}

  void begin_vertex(VertexId, std::uint64_t degree) override {
    wedges_all += choose2(degree);
  }

  void neighbor(VertexId u, VertexId v) override {
    if (v <= u) return;
    ++m;
    const double priority = rng_.uniform01();
    const double tau = admission(m);
    if (priority >= tau) return;
    kept_.push_back({priority, {u, v}});
    peak = std::max<std::uint64_t>(peak, kept_.size());
    if (static_cast<double>(kept_.size()) > 1.25 * tau * static_cast<double>(m) + 32.0) {
      std::erase_if(kept_, [tau](const Entry& e) { return e.priority >= tau; });
    }
  }

  // Uniform sample of min(k, stored) edges.
  std::vector<Edge> finish(std::uint64_t k) {
    const double tau = admission(m);
    std::erase_if(kept_, [tau](const Entry& e) { return e.priority >= tau; });
    std::sort(kept_.begin(), kept_.end(),
              [](const Entry& a, const Entry& b) { return a.priority < b.priority; });
    if (kept_.size() > k) kept_.resize(k);
    std::vector<Edge> out;
    out.reserve(kept_.size());
    for (const auto& e : kept_) out.push_back(e.edge);
    return out;
  }

  std::uint64_t m = 0;
  Count wedges_all = 0;
  std::uint64_t peak = 0;

 private:
  struct Entry {
    double priority;
    Edge edge;
  };

  double admission(std::uint64_t i) const {
    const double x = static_cast<double>(i);
    return std::min(1.0, (2.0 * d_ * std::sqrt(x) * ln_n_ + 64.0) / x);
  }

  double ln_n_;
  double d_;
  SeededRng& rng_;
  std::vector<Entry> kept_;
};

}  // namespace

Pass1Result pass1_identify_heavy(EdgeStream& stream, double d, SeededRng& rng) {
  if (!(d > 0.0)) throw ParameterError("confidence exponent d must be positive");
  Pass1Result result;
  result.n = stream.vertex_count();
  HeavyPass pass(result.n, d, rng);
  stream.replay(pass);
  result.m = pass.m;
  result.wedges_all = pass.wedges_all;

  const auto sample = pass.finish(heavy_sample_size(result.m, result.n, d));
  auto& cand = result.candidates;
  cand.sampled_edges = sample.size();
  for (const Edge& e : sample) {
    cand.sampled.push_back(e.u);
    cand.sampled.push_back(e.v);
  }
  std::sort(cand.sampled.begin(), cand.sampled.end());
  cand.sampled.erase(std::unique(cand.sampled.begin(), cand.sampled.end()),
                     cand.sampled.end());
  result.peak_items = std::max(pass.peak, sample.size() + cand.sampled.size());
  return result;
}

VerifyResult verify_candidates(EdgeStream& stream, Pass1Result& pass1,
                               std::optional<std::uint64_t> threshold) {
  struct Visitor : StreamVisitor {
    const std::vector<VertexId>* candidates;
    std::uint64_t m;
    std::optional<std::uint64_t> threshold;
    std::vector<std::pair<VertexId, std::uint64_t>> kept;
    VerifyResult result;

    bool heavy(std::uint64_t deg) const {
      return threshold ? deg > *threshold : deg * deg >= m && deg > 0;
    }
    void begin_vertex(VertexId u, std::uint64_t deg) override {
      if (contains(*candidates, u) && heavy(deg)) {
        kept.emplace_back(u, deg);
        result.heavy_degree_sum += deg;
      } else {
        result.light_wedges += choose2(deg);
      }
    }
    void neighbor(VertexId, VertexId) override {}
  } visitor;
  visitor.candidates = &pass1.candidates.sampled;
  visitor.m = pass1.m;
  visitor.threshold = threshold;
  stream.replay(visitor);

  visitor.result.peak_items = pass1.candidates.sampled.size() + visitor.kept.size();
  pass1.candidates.confirmed = std::move(visitor.kept);
  return visitor.result;
}

namespace {

// Maps k in [0, C(d, 2)) to the k-th pair (i, j), i < j, in colex order.
std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t k) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (choose2(j) > k) --j;
  while (choose2(j + 1) <= k) ++j;
  return {k - choose2(j), j};
}

class SamplePass : public StreamVisitor {
 public:
  SamplePass(PendingQueries& out, SeededRng& rng) : out_(out), rng_(rng) {}

  void begin_vertex(VertexId u, std::uint64_t degree) override {
    light_ = !contains(out_.heavy, u);
    degree_ = degree;
    if (light_) {
      light_wedges += choose2(degree);
    } else {
      heavy_degree_sum += degree;
    }
  }

  void neighbor(VertexId u, VertexId v) override {
    if (light_ && degree_ >= 2) {
      buffer_.push_back(v);
      track();
    }
    if (v <= u) return;
    for_each_bernoulli(out_.heavy.size(), out_.rate, rng_, [&](std::uint64_t i) {
      const VertexId w = out_.heavy[i];
      if (w == u || w == v) return;
      emit({u, v, w, true}, query(canonical_edge(u, w)), query(canonical_edge(v, w)));
    });
  }

  void end_vertex(VertexId u) override {
    if (light_ && buffer_.size() >= 2) {
      for_each_bernoulli(choose2(buffer_.size()), out_.rate, rng_, [&](std::uint64_t k) {
        auto [i, j] = unrank_pair(k);
        emit({buffer_[i], buffer_[j], u, false}, query(canonical_edge(buffer_[i], buffer_[j])),
             PendingQueries::kNone);
      });
    }
    buffer_.clear();
  }

  Count light_wedges = 0;
  Count heavy_degree_sum = 0;

 private:
  std::uint32_t query(Edge e) {
    auto [it, inserted] = out_.index.try_emplace(edge_key(e), 0);
    if (inserted) {
      it->second = static_cast<std::uint32_t>(out_.queries.size());
      out_.queries.push_back({e, 0, false});
    }
    ++out_.queries[it->second].multiplicity;
    return it->second;
  }

  void emit(SampledTriple t, std::uint32_t q1, std::uint32_t q2) {
    out_.triples.push_back(t);
    out_.triple_queries.emplace_back(q1, q2);
    track();
  }

  void track() {
    out_.peak_items = std::max<std::uint64_t>(
        out_.peak_items,
        out_.heavy.size() + buffer_.size() + out_.triples.size() + out_.queries.size());
  }

  PendingQueries& out_;
  SeededRng& rng_;
  std::vector<VertexId> buffer_;
  bool light_ = false;
  std::uint64_t degree_ = 0;
};

}  // namespace

PendingQueries pass2_sample(EdgeStream& stream, std::vector<VertexId> heavy, double rate,
                            SeededRng& rng) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw ParameterError("sampling rate must lie in [0, 1]");
  std::sort(heavy.begin(), heavy.end());
  heavy.erase(std::unique(heavy.begin(), heavy.end()), heavy.end());

  PendingQueries out;
  out.heavy = std::move(heavy);
  out.rate = rate;
  out.peak_items = out.heavy.size();
  SamplePass pass(out, rng);
  std::uint64_t m = 0;
  struct Counting : StreamVisitor {
    SamplePass* inner;
    std::uint64_t* m;
    void begin_vertex(VertexId u, std::uint64_t deg) override { inner->begin_vertex(u, deg); }
    void neighbor(VertexId u, VertexId v) override {
      *m += v > u;
      inner->neighbor(u, v);
    }
    void end_vertex(VertexId u) override { inner->end_vertex(u); }
  } counting;
  counting.inner = &pass;
  counting.m = &m;
  stream.replay(counting);

  out.universe_size =
      pass.light_wedges + m * out.heavy.size() - pass.heavy_degree_sum;
  return out;
}

Estimate pass3_resolve(EdgeStream& stream, PendingQueries& pending) {
  struct Visitor : StreamVisitor {
    PendingQueries* pending;
    void neighbor(VertexId u, VertexId v) override {
      if (v <= u) return;
      auto it = pending->index.find(edge_key({u, v}));
      if (it != pending->index.end()) pending->queries[it->second].found = true;
    }
  } visitor;
  visitor.pending = &pending;
  stream.replay(visitor);

  Estimate est;
  est.universe_size = pending.universe_size;
  est.samples = pending.triples.size();
  for (auto [q1, q2] : pending.triple_queries) {
    const bool closed = pending.queries[q1].found &&
                        (q2 == PendingQueries::kNone || pending.queries[q2].found);
    est.hits += closed;
  }
  finalize(est);
  if (est.universe_size == 0) {
    est.empty_universe = true;
    est.ci_note = "empty triple universe (no wedges or edge-apex pairs)";
  } else if (est.samples == 0) {
    est.ci_note = "no triples sampled (zero rate or budget)";
  }
  return est;
}

StreamResult stream_estimate(EdgeStream& stream, const StreamOptions& options,
                             SeededRng& rng) {
  StreamResult result;
  const std::uint64_t passes_before = stream.passes();

  Pass1Result pass1 = pass1_identify_heavy(stream, options.d, rng);
  result.n = pass1.n;
  result.m = pass1.m;
  const std::uint64_t budget = options.budget.value_or(pass1.m);

  // Sampling rate from |U| when the verification pass makes it exact, and
  // from an upper bound on |U| otherwise, so the expected sample is <= s.
  double universe_for_rate = 0.0;
  if (options.verify_pass) {
    const VerifyResult verify = verify_candidates(stream, pass1, options.heavy_threshold);
    result.memory.peak_items_verify = verify.peak_items;
    const double h = static_cast<double>(pass1.candidates.confirmed->size());
    universe_for_rate = static_cast<double>(verify.light_wedges) +
                        static_cast<double>(pass1.m) * h -
                        static_cast<double>(verify.heavy_degree_sum);
  } else {
    universe_for_rate = static_cast<double>(pass1.wedges_all) +
                        static_cast<double>(pass1.m) *
                            static_cast<double>(pass1.candidates.sampled.size());
  }
  result.memory.peak_items_pass1 = pass1.peak_items;

  const double rate =
      universe_for_rate > 0.0 ? std::min(1.0, static_cast<double>(budget) / universe_for_rate)
                              : 0.0;
  result.heavy = pass1.candidates.heavy_set();
  PendingQueries pending = pass2_sample(stream, result.heavy, rate, rng);
  result.memory.peak_items_pass2 = pending.peak_items;

  result.estimate = pass3_resolve(stream, pending);
  result.estimate.seed = rng.seed();
  result.memory.peak_items_pass3 = pending.triples.size() + pending.queries.size();
  result.triples = std::move(pending.triples);

  auto& mem = result.memory;
  mem.peak_items = std::max({mem.peak_items_pass1, mem.peak_items_verify, mem.peak_items_pass2,
                             mem.peak_items_pass3});
  const double ln_n = result.n > 1 ? std::log(static_cast<double>(result.n)) : 0.0;
  mem.bound = options.bound_constant *
              (std::sqrt(static_cast<double>(result.m)) * ln_n + static_cast<double>(budget));
  mem.bound_ok = static_cast<double>(mem.peak_items) <= mem.bound;
  result.passes = stream.passes() - passes_before;
  return result;
}

}  // namespace tricount
