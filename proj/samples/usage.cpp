// Copyright 2026 The tgrad Authors
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

// Library walkthrough: densities, a subdivision witness, a pipeline run and a
// bound table. Run from the repository root, or pass the samples directory.

#include <iostream>
#include <string>

#include "tgrad/io/edge_list.hpp"
#include "tgrad/io/json.hpp"
#include "tgrad/tgrad.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "samples";
  try {
    tgrad::Graph petersen = tgrad::io::read_edge_list(dir + "/petersen.el");
    for (const auto& row : tgrad::density_profile(petersen, 2)) {
      std::cout << "k=" << row.k << "  nabla=" << row.nabla.value << "  induced=" << row.induced.value
                << "  exact=" << row.exact.value << '\n';
    }

    tgrad::Graph k4 = tgrad::io::read_edge_list(dir + "/k4.el");
    auto w = tgrad::find_subdivision(petersen, k4, tgrad::SubdivisionSpec::unbounded());
    if (w) {
      std::cout << tgrad::io::witness_to_json({k4, tgrad::SubdivisionSpec::unbounded(), *w}).dump() << '\n';
    }
    std::cout << "TK5 in Petersen: " << (tgrad::find_clique_subdivision(petersen, 5) ? "yes" : "no") << '\n';

    tgrad::Graph s10 = tgrad::io::read_edge_list(dir + "/k10_subdivided.el");
    tgrad::PipelineCertificate cert = tgrad::run_main1_pipeline(s10, {1, 1, 4, true});
    for (const auto& stage : cert.stages) {
      std::cout << stage.stage << (stage.pass ? " ok" : " FAILED") << "  " << stage.claim << '\n';
    }

    tgrad::BoundTable table = tgrad::bexp_bound_table({1, 1}, 1);
    std::cout << "g(1) = " << table.rows[1].value << '\n';
  } catch (const tgrad::Error& e) {
    std::cerr << tgrad::io::error_to_json(e).dump() << '\n';
    return 1;
  }
  return 0;
}
