// Copyright 2026 The ssdef Authors
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

// A short tour: the curve y^2 + y = x^3 over F_4, its automorphisms and level
// structures, its formal group, and the C3 and C2 twists of its deformation.

#include <iostream>

#include "ssdef/deformation.hpp"
#include "ssdef/groups.hpp"
#include "ssdef/level.hpp"

using namespace ssdef;

int main()
{
    const auto& f4 = f4_field();
    const auto c = WCurve<GF>::from_a1_a3(f4.zero(), f4.one());
    std::cout << "curve " << c.str() << " over F_4\n";

    const auto autos = automorphisms(c);
    const auto g = group_from_automorphisms(autos);
    std::cout << "automorphisms: " << autos.size() << ", structure " << structure_id(g.table).name << "\n";

    const auto level = enumerate_level3(c);
    std::cout << "order-3 points: " << level.points.size() << ", subgroups: " << level.subgroups.size()
              << ", bases: " << level.bases.size() << "\n";
    const auto subs = orbits_stabilizers(g, level.subgroups);
    std::cout << "stabilizer of " << level.subgroups[subs.representatives[0]].str() << ": "
              << subs.stabilizer_ids[0].name;
    for (const auto& a : subs.stabilizer_ids[0].aliases) {
        std::cout << " = " << a;
    }
    std::cout << "\n";

    const auto f = fgl_from_curve(c, 9);
    std::cout << "F(x, y) = " << f.F.str() << "\n";
    std::cout << "height " << height(f).str() << "\n";

    const DefPrecision p;
    std::cout << "deformation at " << p.str() << ": " << universal_curve(p.k, p.m).str() << "\n";
    for (int i = 1; i <= 2; ++i) {
        const auto cert = certify_c3(p, i);
        std::cout << "c3^" << i << ": " << (cert.ok() ? "rescaling by " + cert.iso->u.str() : "no certificate")
                  << "\n";
    }
    const auto c2 = certify_c2(p, false);
    std::cout << "c2, residue [-1]: "
              << (c2.inverse_residue.found ? "star-isomorphism found" : c2.inverse_residue.obstruction->str()) << "\n";
    std::cout << "c2 fixing a1, residue [-1]: "
              << (c2.fixing_a1_inverse_residue.found ? "star-isomorphism found"
                                                     : c2.fixing_a1_inverse_residue.obstruction->str())
              << "\n";
    return 0;
}
