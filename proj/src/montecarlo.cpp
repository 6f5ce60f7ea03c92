#include "qppc/montecarlo.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qppc/decoder.hpp"

namespace qppc {

bool SimPoint::same_result(const SimPoint& o) const {
  return p == o.p && list_size == o.list_size && n == o.n && trials == o.trials && failures == o.failures &&
         ler == o.ler && ci95_low == o.ci95_low && ci95_high == o.ci95_high;
}

WilsonInterval wilson_interval(std::size_t failures, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double k = static_cast<double>(failures);
  const double z2 = z * z;
  const double center = (k + z2 / 2) / (n + z2);
  const double half = z / (n + z2) * std::sqrt(k * (n - k) / n + z2 / 4);
  // The bounds at k = 0 and k = n are exact; do not let rounding move them.
  const double low = failures == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = failures >= trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

PauliVec trial_noise(const ChannelParam& param, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  return sample_depolarizing(param, n, trial_seed(seed, trial));
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::size_t count_failures(const QuantumCode& code, double p, std::size_t list_size, std::uint64_t seed,
                           std::uint64_t first, std::size_t count, std::size_t threads) {
  const ChannelParam param(p);
  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(count, 1));
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  auto work = [&] {
    QuantumListDecoder dec(code, param, list_size);
    std::size_t local = 0;
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) break;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t t = begin; t < end; ++t) {
        const PauliVec e = trial_noise(param, code.size(), seed, first + t);
        const QuantumDecodeResult r = dec.decode(measure_syndrome(e, code));
        if (!r.ok || !is_logical_success(r.s_hat, e, code)) ++local;
      }
    }
    failures += local;
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return failures.load();
}

namespace {

SimPoint make_point(const QuantumCode& code, double p, std::size_t list_size, std::size_t trials,
                    std::size_t failures, double seconds) {
  SimPoint pt;
  pt.p = p;
  pt.list_size = list_size;
  pt.n = code.size();
  pt.trials = trials;
  pt.failures = failures;
  pt.ler = trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
  const WilsonInterval ci = wilson_interval(failures, trials);
  pt.ci95_low = ci.low;
  pt.ci95_high = ci.high;
  pt.seconds = seconds;
  return pt;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SimPoint run_point(const QuantumCode& code, double p, std::size_t list_size, std::size_t trials, std::uint64_t seed,
                   std::size_t threads) {
  if (trials < 1) throw std::invalid_argument("run_point: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t failures = count_failures(code, p, list_size, seed, 0, trials, threads);
  return make_point(code, p, list_size, trials, failures, elapsed(start));
}

std::vector<SimPoint> run_sweep(const QuantumCode& code, const std::vector<double>& p_list, std::size_t list_size,
                                std::uint64_t seed, const SweepOptions& opts) {
  if (p_list.empty()) throw std::invalid_argument("run_sweep: p_list must be nonempty");
  if (opts.trials_per_point < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
  std::vector<SimPoint> out;
  for (double p : p_list) {
    if (opts.min_failures == 0) {
      out.push_back(run_point(code, p, list_size, opts.trials_per_point, seed, opts.threads));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t batch = std::max<std::size_t>(1, opts.batch);
    std::size_t done = 0;
    std::size_t failures = 0;
    while (done < opts.trials_per_point && failures < opts.min_failures) {
      const std::size_t count = std::min(batch, opts.trials_per_point - done);
      failures += count_failures(code, p, list_size, seed, done, count, opts.threads);
      done += count;
    }
    out.push_back(make_point(code, p, list_size, done, failures, elapsed(start)));
  }
  return out;
}

std::string render_csv(const std::vector<SimPoint>& points) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SimPoint& pt : points) {
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", pt.p, pt.list_size, pt.n, pt.trials, pt.failures, pt.ler,
                       pt.ci95_low, pt.ci95_high, pt.seconds);
  }
  return out;
}

std::vector<SimPoint> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("csv: missing or unexpected header");
  std::vector<SimPoint> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw std::runtime_error(fmt::format("csv: row {} has {} fields, expected 9", row, f.size()));
    try {
      SimPoint pt;
      pt.p = std::stod(f[0]);
      pt.list_size = std::stoull(f[1]);
      pt.n = std::stoull(f[2]);
      pt.trials = std::stoull(f[3]);
      pt.failures = std::stoull(f[4]);
      pt.ler = std::stod(f[5]);
      pt.ci95_low = std::stod(f[6]);
      pt.ci95_high = std::stod(f[7]);
      pt.seconds = std::stod(f[8]);
      out.push_back(pt);
    } catch (const std::logic_error&) {
      throw std::runtime_error(fmt::format("csv: row {} has a non-numeric field", row));
    }
  }
  return out;
}

}  // namespace qppc
