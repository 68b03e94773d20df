// Copyright 2026 The ums Authors
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

#include "ums/cnot.hpp"

#include <cmath>

namespace ums {

const UnitaryMatrix& cnot_unitary() {
  static const UnitaryMatrix u = [] {
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0 / 3.0);
    ComplexMatrix m(6, 6);
    m << -a, b, 0, 0, 0, 0,
          b, a, 0, 0, 0, 0,
          0, 0, a, a, a, 0,
          0, 0, a, -a, 0, a,
          0, 0, a, 0, -a, -a,
          0, 0, 0, a, -a, a;
    return UnitaryMatrix(std::move(m));
  }();
  return u;
}

const UnitaryMatrix& cnot_mixing_block() {
  static const UnitaryMatrix u = [] {
    ComplexMatrix m(6, 6);
    m << Complex(0.32616497, 0.169709745), Complex(-0.38944321, 0.385222961),
        Complex(-0.07487433, 0.0140016576), Complex(-0.56092302, 0.144894222),
        Complex(-0.09178299, 0.182186722), Complex(-0.37672097, -0.199464971),
        //
        Complex(-0.59574492, 0.341910943), Complex(-0.06002442, 0.0889329420),
        Complex(0.16555801, 0.101417636), Complex(-0.23277056, 0.332764918),
        Complex(0.50921371, -0.219642136), Complex(0.04267885, -0.0685604080),
        //
        Complex(-0.11404973, -0.0005635556), Complex(0.50625739, -0.0702574186),
        Complex(-0.28217237, -0.692726708), Complex(-0.22904901, -0.008906423),
        Complex(0.0634065, 0.0378401459), Complex(-0.17627259, -0.277850848),
        //
        Complex(0.21269847, 0.405463432), Complex(-0.01962757, 0.030734163),
        Complex(0.00386132, -0.166814050), Complex(0.11549117, -0.405381161),
        Complex(0.52450465, 0.316155727), Complex(-0.12388211, 0.439441303),
        //
        Complex(-0.19696007, 0.129259070), Complex(-0.2829352, 0.136684498),
        Complex(-0.23585629, -0.394794001), Complex(-0.07037407, 0.253348908),
        Complex(-0.32129528, 0.173338317), Complex(0.47736737, 0.451640055),
        //
        Complex(0.02205175, -0.338176828), Complex(-0.57000713, 0.0471133316),
        Complex(-0.12412351, -0.377189984), Complex(0.43404681, 0.108197637),
        Complex(0.33695188, -0.153353789), Complex(-0.13322881, -0.213157689);
    return nearest_unitary(m);
  }();
  return u;
}

const Eigen::VectorXd& cnot_reference_phases() {
  // phase[channel j = 1..5][layer m = 1..7]
  static const Eigen::VectorXd phases = [] {
    const double table[5][7] = {
        {2.51592377, 3.52826283, 0.87421821, 3.24176442, 2.92188993, 1.24223769, 4.30510568},
        {0.96157148, 2.57238693, 4.75174626, 2.81009478, 3.53499635, 3.46774956, 6.21377173},
        {5.5529059, 3.32914678, 1.0145169, 6.25955126, 1.27532946, 0.43181492, 0.91744755},
        {1.61215433, 2.30343223, 3.12035203, 4.50728974, 1.78382232, 4.68552694, 2.70720777},
        {1.50025594, 2.0348859, 1.36720772, 4.31057832, 1.88508855, 2.81028466, 0.20069949},
    };
    Eigen::VectorXd p(35);
    for (int m = 0; m < 7; ++m) {
      for (int j = 0; j < 5; ++j) p[5 * m + j] = table[j][m];
    }
    return p;
  }();
  return phases;
}

LayeredArchitecture cnot_reference_architecture() {
  std::vector<UnitaryMatrix> mixing(6, cnot_mixing_block());
  return make_variant(6, LayerVariant::kA, MixingSpec::explicit_list(std::move(mixing)));
}

}  // namespace ums
