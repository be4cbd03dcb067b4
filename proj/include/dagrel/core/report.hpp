#ifndef DAGREL_CORE_REPORT_HPP
#define DAGREL_CORE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dagrel {

// Outcome of a property suite.  Witnesses hold serialised failing inputs so a
// failure can be replayed; a report with failed == 0 has no witnesses.
// Wall time is kept out of the canonical JSON so that identical seeds and
// inputs produce byte-identical artifacts.
class Report {
 public:
  Report(std::string suite, std::uint64_t seed)
      : suite_(std::move(suite)), seed_(seed) {}

  const std::string& suite() const { return suite_; }
  std::uint64_t seed() const { return seed_; }
  int checked() const { return checked_; }
  int passed() const { return passed_; }
  int failed() const { return failed_; }
  int skipped() const { return skipped_; }
  bool incomplete() const { return incomplete_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }
  bool ok() const { return failed_ == 0 && !incomplete_; }

  void count(bool pass, const std::string& witness_on_failure) {
    ++checked_;
    if (pass) {
      ++passed_;
    } else {
      ++failed_;
      witnesses_.push_back(witness_on_failure);
    }
  }

  // Lazy-witness variant: the description is only rendered on failure.
  template <typename F>
  void count_lazy(bool pass, F&& witness_fn) {
    ++checked_;
    if (pass) {
      ++passed_;
    } else {
      ++failed_;
      witnesses_.push_back(witness_fn());
    }
  }

  void skip() { ++skipped_; }
  void mark_incomplete() { incomplete_ = true; }
  void set_wall_ms(double ms) { wall_ms_ = ms; }
  double wall_ms() const { return wall_ms_; }

  void merge(const Report& other) {
    checked_ += other.checked_;
    passed_ += other.passed_;
    failed_ += other.failed_;
    skipped_ += other.skipped_;
    incomplete_ = incomplete_ || other.incomplete_;
    for (const auto& w : other.witnesses_) {
      witnesses_.push_back("[" + other.suite_ + "] " + w);
    }
    wall_ms_ += other.wall_ms_;
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"suite", suite_},
                          {"seed", seed_},
                          {"checked", checked_},
                          {"passed", passed_},
                          {"failed", failed_},
                          {"skipped", skipped_},
                          {"incomplete", incomplete_},
                          {"witnesses", witnesses_}};
  }

  std::string summary() const {
    std::string s = suite_ + ": " + std::to_string(passed_) + "/" +
                    std::to_string(checked_) + " passed";
    if (failed_ > 0) s += ", " + std::to_string(failed_) + " FAILED";
    if (skipped_ > 0) s += ", " + std::to_string(skipped_) + " skipped";
    if (incomplete_) s += " (incomplete)";
    s += " [seed " + std::to_string(seed_) + "]";
    return s;
  }

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  int checked_ = 0;
  int passed_ = 0;
  int failed_ = 0;
  int skipped_ = 0;
  bool incomplete_ = false;
  std::vector<std::string> witnesses_;
  double wall_ms_ = 0;
};

}  // namespace dagrel

#endif
