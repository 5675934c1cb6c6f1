#include "dnum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dnum/document.hpp"
#include "dnum/dst.hpp"
#include "dnum/measures.hpp"

namespace dnum::oracle {

namespace {

// std::mt19937_64 output is fixed by the standard; the distributions are not,
// so the conversions below are done by hand to keep runs reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // (0, 1).
  double open_uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  // [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_enumerable(std::size_t frame_size) {
  if (frame_size > kMaxEnumeratedFrame) {
    throw DNumberError("enumeration is limited to frames of at most " + std::to_string(kMaxEnumeratedFrame) +
                       " elements, got " + std::to_string(frame_size));
  }
}

std::string labelled(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

// Draws a per-trial focal count in [1, max_focal].
GeneratorConfig trial_config(const GeneratorConfig& base, std::uint64_t index) {
  GeneratorConfig cfg = base;
  cfg.seed = trial_seed(base.seed, index);
  Rng rng(splitmix64(cfg.seed ^ 0x5851f42d4c957f2dULL));
  cfg.focal_count = 1 + rng.below(base.focal_count);
  return cfg;
}

double absdiff(const BeliefInterval& a, const BeliefInterval& b) {
  return std::max(std::abs(a.lower() - b.lower()), std::abs(a.upper() - b.upper()));
}

void record(CheckReport& report, double violation, double tolerance, const DNumber& d) {
  report.max_violation = std::max(report.max_violation, violation);
  if (violation > tolerance) report.failures.push_back(serialize_document(d));
}

}  // namespace

double nonexclusivity_by_enumeration(const Frame& frame, Subset a, Subset b) {
  if (a.empty() || b.empty()) throw DNumberError("non-exclusive degree is undefined for the empty set");
  const std::size_t n = frame.size() + 1;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.contains(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.contains(j)) continue;
      if (i == j) return 1.0;
      best = std::max(best, frame.degree(i, j));
    }
  }
  return best;
}

BeliefInterval oracle_bel_pl(const DNumber& d, Subset a) {
  const Frame& frame = d.frame();
  require_enumerable(frame.size());
  if (!d.completed()) throw DNumberError("oracle evaluation needs a completed D number");
  if (!frame.owns(a)) throw DNumberError("proposition lies outside the frame");

  double belief = 0.0;
  for (std::uint64_t sub = a.mask; sub != 0; sub = (sub - 1) & a.mask) belief += d.mass(Subset{sub});

  double intersecting = 0.0;
  double disjoint = 0.0;
  if (!a.empty()) {
    const std::uint64_t end = std::uint64_t{1} << (frame.size() + 1);
    for (std::uint64_t m = 1; m < end; ++m) {
      const Subset b{m};
      const double mass = d.mass(b);
      if (mass == 0.0) continue;
      if ((m & a.mask) != 0) {
        intersecting += mass;
      } else {
        disjoint += nonexclusivity_by_enumeration(frame, b, a) * mass;
      }
    }
  }
  return {belief, intersecting + disjoint};
}

void validate(const GeneratorConfig& config) {
  if (config.frame_size < 1 || config.frame_size > kMaxEnumeratedFrame) {
    throw DNumberError("frame size must lie in [1, " + std::to_string(kMaxEnumeratedFrame) + "], got " +
                       std::to_string(config.frame_size));
  }
  const std::uint64_t subsets = (std::uint64_t{1} << config.frame_size) - 1;
  if (config.focal_count < 1 || config.focal_count > subsets) {
    throw DNumberError("focal count " + std::to_string(config.focal_count) + " is infeasible for frame size " +
                       std::to_string(config.frame_size) + " (at most " + std::to_string(subsets) + ")");
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::shared_ptr<const Frame> generate_frame(std::size_t frame_size, Exclusivity exclusivity, std::uint64_t seed) {
  require_enumerable(frame_size);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < frame_size; ++i) labels.push_back(labelled(i));
  std::vector<DegreeSpec> degrees;
  if (exclusivity == Exclusivity::random_degrees) {
    Rng rng(seed);
    for (std::size_t i = 0; i <= frame_size; ++i)
      for (std::size_t j = i + 1; j <= frame_size; ++j) {
        const std::string a = i == frame_size ? std::string(kUnknownLabel) : labels[i];
        const std::string b = j == frame_size ? std::string(kUnknownLabel) : labels[j];
        degrees.push_back({a, b, rng.uniform()});
      }
  }
  return std::make_shared<const Frame>(std::move(labels), std::nullopt, degrees);
}

DNumber generate_raw(const GeneratorConfig& config) {
  validate(config);
  Rng rng(config.seed);
  auto frame = generate_frame(config.frame_size, config.exclusivity, rng.next());

  // Partial Fisher-Yates over the nonempty subsets of Theta.
  std::vector<std::uint64_t> candidates((std::uint64_t{1} << config.frame_size) - 1);
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i + 1;
  for (std::size_t i = 0; i < config.focal_count; ++i) {
    std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
  }

  // Flat Dirichlet via normalized exponentials.
  std::vector<double> weights(config.focal_count);
  double sum = 0.0;
  for (auto& w : weights) {
    w = -std::log(rng.open_uniform());
    sum += w;
  }

  bool incomplete = config.completeness == Completeness::incomplete;
  if (config.completeness == Completeness::random) incomplete = rng.below(2) == 1;
  const double total = incomplete ? std::min(rng.open_uniform(), 1.0 - 1e-6) : 1.0;

  std::vector<FocalElement> entries;
  for (std::size_t i = 0; i < config.focal_count; ++i) {
    entries.push_back({Subset{candidates[i]}, total * weights[i] / sum});
  }
  return DNumber(std::move(frame), std::move(entries));
}

DNumber generate(const GeneratorConfig& config) { return complete(generate_raw(config)); }

DNumber mix_with_vacuous(const DNumber& d, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw DNumberError("mixing weight must lie in [0, 1]");
  std::vector<FocalElement> entries;
  for (const auto& e : d.focal_elements()) entries.push_back({e.set, (1.0 - weight) * e.mass});
  entries.push_back({d.frame().universe(), weight});
  return DNumber(d.frame_ptr(), std::move(entries));
}

double MeasureImpl::ku(const DNumber& d) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < d.frame().size(); ++i) {
    sum += known_uncertainty_term(interval(d, Subset::singleton(i)));
  }
  return sum;
}

MeasureImpl library_measures() {
  return {"library", [](const DNumber& d, Subset a) { return dnum::bel(d, a); },
          [](const DNumber& d, Subset a) { return dnum::pl(d, a); }};
}

MeasureImpl mutant_pl_without_disjoint_branch() {
  return {"pl-without-disjoint-branch", [](const DNumber& d, Subset a) { return dnum::bel(d, a); },
          [](const DNumber& d, Subset a) {
            double sum = 0.0;
            for (const auto& e : d.focal_elements())
              if (e.set.intersects(a)) sum += e.mass;
            return sum;
          }};
}

MeasureImpl mutant_pl_ignoring_degrees() {
  return {"pl-ignoring-degrees", [](const DNumber& d, Subset a) { return dnum::bel(d, a); },
          [](const DNumber& d, Subset a) {
            if (a.empty()) return 0.0;
            double sum = 0.0;
            for (const auto& e : d.focal_elements()) sum += e.mass;
            return sum;
          }};
}

void CheckReport::merge(CheckReport other) {
  trials += other.trials;
  max_violation = std::max(max_violation, other.max_violation);
  std::move(other.failures.begin(), other.failures.end(), std::back_inserter(failures));
  std::move(other.notes.begin(), other.notes.end(), std::back_inserter(notes));
}

CheckReport check_range(std::size_t trials, const GeneratorConfig& config, const MeasureImpl& impl) {
  validate(config);
  CheckReport report{"range"};
  for (std::size_t t = 0; t < trials; ++t) {
    const DNumber d = generate(trial_config(config, t));
    const double n = static_cast<double>(d.frame().size());
    const double k = impl.ku(d);
    const double u = impl.uu_coefficient(d);
    const double violation = std::max({0.0, -k, k - n, -u, u - 1.0});
    record(report, violation, kMassTolerance, d);
    ++report.trials;
  }
  return report;
}

bool check_monotone_pair(const DNumber& inner, const DNumber& outer, const MeasureImpl& impl, CheckReport& report) {
  const Frame& frame = inner.frame();
  require_enumerable(frame.size());
  if (!(frame == outer.frame())) throw DNumberError("monotonicity pairs must share a frame");
  const std::uint64_t end = std::uint64_t{1} << (frame.size() + 1);
  for (std::uint64_t m = 1; m < end; ++m) {
    const Subset a{m};
    if (!impl.interval(outer, a).contains(impl.interval(inner, a), kOracleTolerance)) return false;
  }
  const double violation = std::max({0.0, impl.ku(inner) - impl.ku(outer),
                                     impl.uu_coefficient(inner) - impl.uu_coefficient(outer)});
  report.max_violation = std::max(report.max_violation, violation);
  if (violation > kMassTolerance) {
    report.failures.push_back(serialize_document(inner) + serialize_document(outer));
  }
  ++report.trials;
  return true;
}

CheckReport check_monotonicity(std::size_t accepted_pairs, const GeneratorConfig& config, const MeasureImpl& impl) {
  validate(config);
  CheckReport report{"monotonicity"};
  const std::size_t max_attempts = 20 * accepted_pairs + 20;
  std::size_t attempts = 0;
  for (; attempts < max_attempts && report.trials < accepted_pairs; ++attempts) {
    const GeneratorConfig cfg = trial_config(config, attempts);
    const DNumber d = generate(cfg);
    Rng rng(splitmix64(cfg.seed));
    double w1 = rng.uniform();
    double w2 = rng.uniform();
    if (w1 > w2) std::swap(w1, w2);
    if (attempts % 5 == 0) w1 = 0.0;  // the generated D number itself as the inner one
    check_monotone_pair(mix_with_vacuous(d, w1), mix_with_vacuous(d, w2), impl, report);
  }
  if (report.trials < accepted_pairs) {
    report.failures.push_back("only " + std::to_string(report.trials) + " of " + std::to_string(accepted_pairs) +
                              " pairs were nested after " + std::to_string(attempts) + " attempts");
  }
  return report;
}

CheckReport check_set_consistency(const std::shared_ptr<const Frame>& frame, const MeasureImpl& impl) {
  require_enumerable(frame->size());
  CheckReport report{"set-consistency"};
  const std::uint64_t end = std::uint64_t{1} << frame->size();
  for (std::uint64_t m = 1; m < end; ++m) {
    const Subset a{m};
    const DNumber d(frame, {{a, 1.0}});
    double outside = 0.0;
    for (std::size_t i = 0; i < frame->size(); ++i) {
      if (!a.contains(i)) outside += nonexclusivity_by_enumeration(*frame, Subset::singleton(i), a);
    }
    const double observed = impl.ku(d);
    const double theorem = static_cast<double>(a.size()) + outside;
    if (a.size() >= 2) {
      record(report, std::abs(observed - theorem), kMassTolerance, d);
    } else {
      std::ostringstream note;
      note.precision(7);
      note << std::fixed << "|A|=1 deviation: A=" << frame->describe(a) << " observed KU=" << observed
           << " (sum of u over the rest), |A| + sum of u would give " << theorem;
      report.notes.push_back(note.str());
      record(report, std::abs(observed - outside), kMassTolerance, d);
    }
    ++report.trials;
  }
  return report;
}

CheckReport check_degeneration(std::size_t trials, std::size_t frame_size, std::uint64_t seed,
                               const MeasureImpl& impl) {
  GeneratorConfig base{frame_size, (std::size_t{1} << frame_size) - 1, Completeness::complete,
                       Exclusivity::exclusive, seed};
  validate(base);
  CheckReport report{"degeneration"};
  for (std::size_t t = 0; t < trials; ++t) {
    const DNumber d = generate(trial_config(base, t));
    if (!is_bpa(d)) {
      report.failures.push_back(serialize_document(d));
      ++report.trials;
      continue;
    }
    double violation = 0.0;
    const std::uint64_t end = std::uint64_t{1} << frame_size;
    for (std::uint64_t m = 1; m < end; ++m) {
      const Subset a{m};
      const BeliefInterval checked = impl.interval(d, a);
      const BeliefInterval classical{dst::belief(d.focal_elements(), a), dst::plausibility(d.focal_elements(), a)};
      violation = std::max({violation, absdiff(checked, oracle_bel_pl(d, a)), absdiff(checked, classical)});
    }
    const double reference = dst_ku_reference(d);
    violation = std::max({violation, std::abs(impl.ku(d) - reference), std::abs(dnum::ku(d) - reference)});
    record(report, violation, kOracleTolerance, d);
    ++report.trials;
  }
  return report;
}

CheckReport check_oracle_equivalence(std::size_t trials, const GeneratorConfig& config, const MeasureImpl& impl) {
  validate(config);
  CheckReport report{"oracle"};
  for (std::size_t t = 0; t < trials; ++t) {
    GeneratorConfig cfg = config;
    cfg.seed = trial_seed(config.seed, t);
    Rng rng(splitmix64(cfg.seed ^ 0xda3e39cb94b95bdbULL));
    cfg.frame_size = 1 + rng.below(config.frame_size);
    const std::uint64_t subsets = (std::uint64_t{1} << cfg.frame_size) - 1;
    cfg.focal_count = 1 + rng.below(std::min<std::uint64_t>(config.focal_count, subsets));
    const DNumber d = generate(cfg);

    double violation = 0.0;
    const std::uint64_t end = std::uint64_t{1} << (cfg.frame_size + 1);
    for (std::uint64_t m = 1; m < end; ++m) {
      const Subset a{m};
      violation = std::max(violation, absdiff(impl.interval(d, a), oracle_bel_pl(d, a)));
    }
    record(report, violation, kOracleTolerance, d);
    ++report.trials;
  }
  return report;
}

}  // namespace dnum::oracle
