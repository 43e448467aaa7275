// Copyright 2026 The lieplateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lieplateau/dla.hpp"

namespace lieplateau {

Eigen::MatrixXd StructureData::ad_of(const Eigen::VectorXd& h) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k)
    if (h(k) != 0.0) m += h(k) * ad[k];
  return m;
}

}  // namespace lieplateau
