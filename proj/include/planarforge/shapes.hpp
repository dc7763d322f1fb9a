#pragma once

#include "planarforge/plane_graph.hpp"

namespace planarforge::shapes {

/// Small named instances used across the test suites.
PlaneGraph k4();
PlaneGraph cycle(int n);
PlaneGraph theta();          // 2 vertices joined by 3 length-2 paths
PlaneGraph wheel(int rim);   // hub + rim cycle
PlaneGraph octahedron();
PlaneGraph cube();
PlaneGraph prism(int n);     // n-gonal prism (prism(3) = triangular)
PlaneGraph antiprism(int n); // 4-regular
PlaneGraph two_block_cubic_8();  // two K4-minus-edge blocks joined by 2 edges
PlaneGraph path(int edges);

}  // namespace planarforge::shapes
