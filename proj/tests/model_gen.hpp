#pragma once

// Deterministic random glue models for property tests. Draws are retried
// until the closed-point budget of the base accepts the prescription set.

#include <random>

#include "singcurve/gluing.hpp"

namespace singcurve::testing {

class ModelGen {
 public:
  explicit ModelGen(uint32_t seed) : rng_(seed) {}

  ValidatedModel next(const SmoothZeta& base, unsigned max_degree = 4, unsigned max_mult = 3,
                      unsigned max_prescriptions = 3, unsigned max_branches = 3) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      SingularCurveModel m{base, {}};
      unsigned npres = 1 + rng_() % max_prescriptions;
      for (unsigned i = 0; i < npres; ++i) {
        SingularityPrescription pres;
        unsigned nbr = 1 + rng_() % max_branches;
        for (unsigned j = 0; j < nbr; ++j)
          pres.branches.push_back(
              BranchSpec{1 + static_cast<unsigned>(rng_() % max_degree),
                         1 + static_cast<unsigned>(rng_() % max_mult)});
        m.singularities.push_back(std::move(pres));
      }
      try {
        return ValidatedModel::validate(std::move(m));
      } catch (const validation_error&) {
        // budget exceeded or zero-delta prescription; redraw
      }
    }
    throw std::runtime_error("model generator starved; base budget too tight");
  }

 private:
  std::mt19937 rng_;
};

}  // namespace singcurve::testing
