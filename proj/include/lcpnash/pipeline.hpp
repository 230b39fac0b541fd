// Copyright 2026 The lcpnash Authors
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

// End-to-end driver from an instance to classified equilibria, plus a
// single-instance audit against the oracle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcpnash/lcp.hpp"
#include "lcpnash/lemke.hpp"
#include "lcpnash/nash.hpp"
#include "lcpnash/recovery.hpp"
#include "lcpnash/reduction.hpp"

namespace lcpnash {

struct PipelineOptions {
  std::optional<Rational> beta;  ///< overrides compute_beta
  BetaMode beta_mode = BetaMode::Auto;
  std::size_t max_strategies = 12;
  unsigned threads = 1;
  bool resolve_directions = true;  ///< turn type-1 directions into solutions or rays
};

struct PipelineEntry {
  Equilibrium equilibrium;
  EquilibriumClassification classification;
  std::optional<Resolution> resolved;  ///< in the space of PipelineReport::instance
};

struct PipelineReport {
  ExtendedInstance instance;        ///< input, or its perturbation when one was needed
  std::optional<Rational> epsilon;  ///< set when the covering vector was perturbed
  bool trivial = false;             ///< q >= 0, z = 0 returned without a game
  Rational beta;
  std::optional<FullReduction> reduction;
  std::vector<PipelineEntry> entries;
};

/**
 * Scale, pick beta, build the full game, enumerate its symmetric equilibria
 * and classify each. A degenerate type-1 direction triggers one rerun on
 * perturb_covering(ext).
 */
PipelineReport run_pipeline(const ExtendedInstance& ext, const PipelineOptions& options = {});

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool passed() const;
};

/**
 * Runs Lemke, the pipeline and the oracle on one instance and compares them.
 * Throws SizeError above kSkeletonMaxDim and lets DegeneracyError escape
 * (a beta below the vertex bound surfaces that way).
 */
AuditReport audit(const ExtendedInstance& ext, const PipelineOptions& options = {});

}  // namespace lcpnash
