#include "aeap/harness.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"
#include "aeap/solvers.hpp"

namespace aeap {

namespace {

// Draws straight from the engine's output, whose sequence is fixed by the
// standard, so instances are identical across standard library vendors.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

EntityId make(Side side, int index) { return {side, static_cast<std::uint32_t>(index)}; }

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError("invalid value '" + value + "' for key '" + key + "'");
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected key = value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

bool apply_generator_key(GeneratorConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "n_a") cfg.n_a = parse_number<int>(key, value);
  else if (key == "n_b") cfg.n_b = parse_number<int>(key, value);
  else if (key == "max_minterms") cfg.max_minterms = parse_number<int>(key, value);
  else if (key == "max_minterm_size") cfg.max_minterm_size = parse_number<int>(key, value);
  else if (key == "idr_probability") cfg.idr_probability = parse_number<double>(key, value);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else return false;
  return true;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

Network gen_network(const GeneratorConfig& cfg) {
  if (cfg.n_a < 1 || cfg.n_b < 1) throw ValidationError("entity counts must be at least 1");
  if (cfg.max_minterms < 1 || cfg.max_minterm_size < 1) throw ValidationError("minterm bounds must be at least 1");
  if (!(cfg.idr_probability >= 0.0 && cfg.idr_probability <= 1.0)) {
    throw ValidationError("idr_probability must lie in [0, 1]");
  }
  Draw draw(cfg.seed);
  std::vector<Rule> rules;
  auto generate_side = [&](Side side, int count, Side other, int other_count) {
    std::vector<int> pool(static_cast<std::size_t>(other_count));
    for (int i = 1; i <= count; ++i) {
      Rule rule{make(side, i), {}};
      if (draw.chance(cfg.idr_probability)) {
        const int minterms = draw.uniform(1, cfg.max_minterms);
        for (int m = 0; m < minterms; ++m) {
          const int size = draw.uniform(1, std::min(cfg.max_minterm_size, other_count));
          for (int j = 0; j < other_count; ++j) pool[static_cast<std::size_t>(j)] = j + 1;
          std::vector<EntityId> literals;
          for (int j = 0; j < size; ++j) {
            const int pick = draw.uniform(j, other_count - 1);
            std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
            literals.push_back(make(other, pool[static_cast<std::size_t>(j)]));
          }
          Minterm minterm(std::move(literals));
          if (std::find(rule.minterms.begin(), rule.minterms.end(), minterm) == rule.minterms.end()) {
            rule.minterms.push_back(std::move(minterm));
          }
        }
      }
      rules.push_back(std::move(rule));
    }
  };
  generate_side(Side::A, cfg.n_a, Side::B, cfg.n_b);
  generate_side(Side::B, cfg.n_b, Side::A, cfg.n_a);
  return Network(std::move(rules));
}

GeneratorConfig parse_generator_config(std::string_view text) {
  GeneratorConfig cfg;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (!apply_generator_key(cfg, key, value)) throw ValidationError("unknown key '" + key + "'");
  }
  return cfg;
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig sweep;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (apply_generator_key(sweep.generator, key, value)) continue;
    if (key == "instances") {
      sweep.instances = parse_number<int>(key, value);
    } else if (key == "k") {
      sweep.k = parse_number<int>(key, value);
    } else if (key == "cap") {
      sweep.cap = parse_number<std::uint64_t>(key, value);
    } else if (key == "timings") {
      sweep.record_timings = parse_number<int>(key, value) != 0;
    } else if (key == "s_list") {
      sweep.budgets.clear();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        auto next = value.find(',', pos);
        if (next == std::string::npos) next = value.size();
        const auto item = trim(std::string_view(value).substr(pos, next - pos));
        if (!item.empty()) sweep.budgets.push_back(parse_number<int>(key, item));
        pos = next + 1;
      }
      if (sweep.budgets.empty()) throw ValidationError("s_list must not be empty");
    } else {
      throw ValidationError("unknown key '" + key + "'");
    }
  }
  if (sweep.instances < 1) throw ValidationError("instances must be at least 1");
  return sweep;
}

std::vector<ExperimentInstance> instances_from_sweep(const SweepConfig& sweep) {
  std::vector<ExperimentInstance> out;
  for (int i = 0; i < sweep.instances; ++i) {
    auto cfg = sweep.generator;
    cfg.seed = sweep.generator.seed + static_cast<std::uint64_t>(i);
    out.push_back({std::to_string(i + 1), gen_network(cfg), sweep.k, sweep.budgets});
  }
  return out;
}

std::vector<ExperimentRecord> run_experiment(const std::vector<ExperimentInstance>& instances,
                                             const ExperimentOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto ms_since = [&](Clock::time_point start) {
    if (!options.record_timings) return 0.0;
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  std::vector<ExperimentRecord> records;
  for (const auto& inst : instances) {
    const auto& net = inst.network;
    const bool exhaustive = binomial(net.size(), static_cast<std::uint64_t>(std::max(inst.k, 0))) <= options.cap;
    const auto attack = exhaustive ? k_most_vulnerable_exact(net, inst.k, options.cap)
                                   : k_most_vulnerable_greedy(net, inst.k);
    const auto induced = induced_failure_set(simulate_cascade(net, attack.attacked));
    for (int s : inst.budgets) {
      ExperimentRecord rec;
      rec.instance = inst.id;
      rec.na = static_cast<int>(net.entities_a().size());
      rec.nb = static_cast<int>(net.entities_b().size());
      rec.k = inst.k;
      rec.s = s;
      rec.induced_before = static_cast<int>(induced.size());
      rec.attack_method = exhaustive ? "exact" : "greedy";

      auto start = Clock::now();
      const auto heur = solve_heuristic(net, attack.attacked, s);
      rec.ms_heuristic = ms_since(start);
      rec.protected_heuristic = static_cast<int>(heur.protected_total.size());

      start = Clock::now();
      try {
        const auto exact = solve_exact(net, attack.attacked, s, options.cap);
        rec.ms_exact = ms_since(start);
        const int best = static_cast<int>(exact.protected_total.size());
        rec.protected_exact = best;
        if (best < rec.protected_heuristic) {
          throw std::logic_error("instance " + inst.id + ", s=" + std::to_string(s) +
                                 ": heuristic protects more than the optimum");
        }
        rec.gap_percent = 100.0 * (best - rec.protected_heuristic) / std::max(best, 1);
      } catch (const CapExceededError&) {
        rec.ms_exact = ms_since(start);
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "instance,na,nb,k,s,induced_before,prot_heur,prot_exact,gap_pct,ms_heur,ms_exact\n";
  for (const auto& r : records) {
    out += r.instance + "," + std::to_string(r.na) + "," + std::to_string(r.nb) + "," + std::to_string(r.k) + "," +
           std::to_string(r.s) + "," + std::to_string(r.induced_before) + "," + std::to_string(r.protected_heuristic) +
           ",";
    if (r.protected_exact) {
      out += std::to_string(*r.protected_exact) + "," + fixed(r.gap_percent, 2);
    } else {
      out += ",";
    }
    out += "," + fixed(r.ms_heuristic, 3) + "," + fixed(r.ms_exact, 3) + "\n";
  }
  return out;
}

std::string render_svg(const std::vector<ExperimentRecord>& records) {
  constexpr int kWidth = 520;
  constexpr int kHeight = 320;
  constexpr int kLeft = 50;
  constexpr int kRight = 20;
  constexpr int kTop = 40;
  constexpr int kBottom = 50;
  const int plot_w = kWidth - kLeft - kRight;
  const int plot_h = kHeight - kTop - kBottom;

  int y_max = 1;
  for (const auto& r : records) {
    y_max = std::max({y_max, r.induced_before, r.protected_heuristic, r.protected_exact.value_or(0)});
  }
  const auto y_of = [&](int v) { return kTop + plot_h - (plot_h * v) / y_max; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) + "\" height=\"" +
         std::to_string(kHeight) + "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " + std::to_string(kHeight) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::string title = records.empty()
                                ? std::string("no records")
                                : "Instance " + records.front().instance + " (k=" + std::to_string(records.front().k) +
                                      ", induced failures " + std::to_string(records.front().induced_before) + ")";
  out += "<text x=\"" + std::to_string(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" + title +
         "</text>\n";

  // Axes and y ticks.
  out += "<line x1=\"" + std::to_string(kLeft) + "\" y1=\"" + std::to_string(kTop) + "\" x2=\"" +
         std::to_string(kLeft) + "\" y2=\"" + std::to_string(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + std::to_string(kLeft) + "\" y1=\"" + std::to_string(kTop + plot_h) + "\" x2=\"" +
         std::to_string(kLeft + plot_w) + "\" y2=\"" + std::to_string(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  const int step = std::max(1, y_max / 5);
  for (int v = 0; v <= y_max; v += step) {
    out += "<text x=\"" + std::to_string(kLeft - 6) + "\" y=\"" + std::to_string(y_of(v) + 4) +
           "\" text-anchor=\"end\">" + std::to_string(v) + "</text>\n";
  }
  out += "<text x=\"14\" y=\"" + std::to_string(kTop + plot_h / 2) + "\" transform=\"rotate(-90 14 " +
         std::to_string(kTop + plot_h / 2) + ")\" text-anchor=\"middle\">entities protected</text>\n";

  const int groups = std::max<int>(1, static_cast<int>(records.size()));
  const int group_w = plot_w / groups;
  const int bar_w = std::max(4, group_w / 3);
  for (std::size_t g = 0; g < records.size(); ++g) {
    const auto& r = records[g];
    const int x0 = kLeft + static_cast<int>(g) * group_w + (group_w - 2 * bar_w) / 2;
    const auto bar = [&](int x, int value, const char* color) {
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y_of(value)) + "\" width=\"" +
             std::to_string(bar_w) + "\" height=\"" + std::to_string(kTop + plot_h - y_of(value)) + "\" fill=\"" +
             color + "\"/>\n";
      out += "<text x=\"" + std::to_string(x + bar_w / 2) + "\" y=\"" + std::to_string(y_of(value) - 3) +
             "\" text-anchor=\"middle\">" + std::to_string(value) + "</text>\n";
    };
    bar(x0, r.protected_heuristic, "#4c72b0");
    if (r.protected_exact) bar(x0 + bar_w, *r.protected_exact, "#dd8452");
    out += "<text x=\"" + std::to_string(x0 + bar_w) + "\" y=\"" + std::to_string(kTop + plot_h + 16) +
           "\" text-anchor=\"middle\">S=" + std::to_string(r.s) + "</text>\n";
  }

  const int ly = kHeight - 14;
  out += "<rect x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(ly - 9) +
         "\" width=\"10\" height=\"10\" fill=\"#4c72b0\"/>\n";
  out += "<text x=\"" + std::to_string(kLeft + 14) + "\" y=\"" + std::to_string(ly) + "\">heuristic</text>\n";
  out += "<rect x=\"" + std::to_string(kLeft + 90) + "\" y=\"" + std::to_string(ly - 9) +
         "\" width=\"10\" height=\"10\" fill=\"#dd8452\"/>\n";
  out += "<text x=\"" + std::to_string(kLeft + 104) + "\" y=\"" + std::to_string(ly) + "\">optimal</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace aeap
