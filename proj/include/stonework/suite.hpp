#ifndef STONEWORK_SUITE_HPP_
#define STONEWORK_SUITE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stonework/limits.hpp"

namespace stonework {

  //! Sizes of the exhaustive and randomized sweeps run by `verify`.
  struct SuiteConfig {
    std::size_t   bound_points = 3;  // |Y| for the duality checks
    std::size_t   bound_atoms  = 3;  // n for the full End(B) checks
    std::size_t   bound_k      = 4;  // truncation of the contrast monoid
    std::uint64_t seed         = 1;
    bool          self_test    = false;
    Limits        limits;  // the CLI fills this from the environment

    //! Throws ConfigError for out-of-range bounds.
    void validate() const;
  };

  struct VerificationReport {
    std::string check_name;
    std::string instance_parameters;
    std::size_t instances_checked = 0;
    bool        passed            = true;
    //! JSON text of the first failing instance; empty on success.
    std::string witness;
    double      elapsed_ms = 0;
  };

  //! Every check at the configured sizes, in a fixed order.  Failures are
  //! reported, not thrown.
  std::vector<VerificationReport> run_suite(SuiteConfig const& config);

  //! The duality checks alone (used by `verify-duality`).
  std::vector<VerificationReport> run_duality_suite(std::size_t   points,
                                                    std::size_t   atoms,
                                                    Limits const& limits);

  //! Negative control: validates a deliberately non-associative table and
  //! reports the failure with the offending triple.
  VerificationReport run_self_test();

  bool all_passed(std::vector<VerificationReport> const& reports);

  //! Tab-separated: check, parameters, instances, outcome, elapsed_ms,
  //! witness.  With a header line.
  std::string reports_to_tsv(std::vector<VerificationReport> const& reports);

  std::string reports_to_json(std::vector<VerificationReport> const& reports);

}  // namespace stonework

#endif  // STONEWORK_SUITE_HPP_
