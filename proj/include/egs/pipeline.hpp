#ifndef EGS_PIPELINE_HPP
#define EGS_PIPELINE_HPP

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "egs/enumerate.hpp"
#include "egs/ingest.hpp"
#include "egs/report.hpp"
#include "egs/search.hpp"

namespace egs {

using OrderCallback = std::function<void(const OrderSummary&)>;

namespace detail {

// Runs body(i) for i in [0, jobs) on separate threads and rethrows the
// first exception raised by any of them.
inline void run_workers(std::size_t jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex mu;
  for (std::size_t i = 0; i < jobs; ++i) {
    threads.emplace_back([&, i] {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline OrderSummary classify_generated(std::size_t n, const SearchConfig& cfg) {
  std::vector<OrderSummary> local(cfg.jobs);
  run_workers(cfg.jobs, [&](std::size_t part) {
    local[part].n = n;
    generate({n, cfg.mode}, [&](const Graph& g) { local[part].record(classify(g, cfg)); },
             Partition{part, cfg.jobs});
  });
  OrderSummary out;
  out.n = n;
  for (const auto& l : local) out.merge(l);
  return out;
}

inline OrderSummary classify_batch(std::size_t n, const std::vector<Graph>& graphs,
                                   const SearchConfig& cfg) {
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, graphs.size()));
  std::vector<OrderSummary> local(jobs);
  run_workers(jobs, [&](std::size_t part) {
    for (std::size_t i = part; i < graphs.size(); i += jobs) local[part].record(classify(graphs[i], cfg));
  });
  OrderSummary out;
  out.n = n;
  for (const auto& l : local) out.merge(l);
  return out;
}

inline std::vector<OrderSummary> resumable_orders(const SearchConfig& cfg) {
  if (!cfg.resume || !std::filesystem::exists(*cfg.out)) return {};
  auto doc = read_json_file(*cfg.out);
  // The order range may grow between runs; everything else must match.
  auto stored = doc.at("config");
  auto wanted = config_to_json(cfg);
  stored.erase("orders");
  wanted.erase("orders");
  if (stored != wanted)
    throw std::runtime_error("cannot resume: " + cfg.out->string() +
                             " was written with a different configuration");
  return orders_from_json(doc);
}

}  // namespace detail

/// Classifies every graph of the configured source over the order range.
///
/// Work within an order is split across `cfg.jobs` threads, each with its
/// own partial summary; partials are merged and survivors sorted, so the
/// result does not depend on the thread count. With `cfg.out` set, the
/// summary is rewritten after each completed order, and with `cfg.resume`
/// orders already present in that file are taken from it.
inline SearchSummary run_search(const SearchConfig& cfg, const OrderCallback& on_order = {}) {
  cfg.validate();
  SearchSummary summary;
  summary.config = cfg;
  std::map<std::size_t, OrderSummary> done;
  for (auto& o : detail::resumable_orders(cfg)) done[o.n] = std::move(o);

  auto finish = [&](OrderSummary o, std::chrono::steady_clock::time_point start) {
    std::sort(o.survivors.begin(), o.survivors.end());
    o.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_order) on_order(o);
    summary.orders.push_back(std::move(o));
    if (cfg.out) write_json_atomic(*cfg.out, summary_to_json(summary));
  };
  auto take_done = [&](std::size_t n) {
    auto it = done.find(n);
    if (it == done.end()) return false;
    summary.orders.push_back(it->second);
    if (on_order) on_order(it->second);
    return true;
  };

  if (cfg.ingest) {
    std::map<std::size_t, std::vector<Graph>> by_order;
    auto collect = [&](std::istream& in) {
      Graph6Reader reader(in, cfg.strict_ingest);
      while (auto g = reader.next())
        if (g->order() >= cfg.orders.lo && g->order() <= cfg.orders.hi) by_order[g->order()].push_back(*g);
      summary.ingest_errors = reader.errors();
    };
    if (*cfg.ingest == "-") {
      collect(std::cin);
    } else {
      std::ifstream in(*cfg.ingest);
      if (!in) throw std::runtime_error("cannot open " + *cfg.ingest);
      collect(in);
    }
    for (auto n = cfg.orders.lo; n <= cfg.orders.hi; ++n) {
      if (take_done(n)) continue;
      auto it = by_order.find(n);
      if (it == by_order.end()) continue;
      const auto start = std::chrono::steady_clock::now();
      finish(detail::classify_batch(n, it->second, cfg), start);
    }
  } else {
    for (auto n = cfg.orders.lo; n <= cfg.orders.hi; ++n) {
      if (cfg.mode == GenMode::cubic_connected && n % 2 == 1) continue;
      if (take_done(n)) continue;
      const auto start = std::chrono::steady_clock::now();
      finish(detail::classify_generated(n, cfg), start);
    }
  }
  if (cfg.out) write_json_atomic(*cfg.out, summary_to_json(summary));
  return summary;
}

}  // namespace egs

#endif  // EGS_PIPELINE_HPP
