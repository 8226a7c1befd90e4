// Full-scale acceptance run: one line per criterion, exit = failure count.
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "yflip/verify.hpp"

using namespace yflip;

int main() {
    std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"01 bijection counts, n <= 8", [] {
             for (int n = 1; n <= 8; ++n)
                 if (!verify_bijection(n)) return false;
             return true;
         }},
        {"02 golden octagon example", [] {
             Triangulation t = Triangulation::parse("8; (4,6),(2,4),(2,6),(0,2),(0,6)");
             Partition p = Partition::parse("[4,2,2]");
             return lambda_map(t) == p && lambda_inverse(p, 8) == t;
         }},
        {"03 flip conjugation, n <= 7", [] {
             for (int n = 1; n <= 7; ++n)
                 if (!verify_flip_conjugation(n)) return false;
             return true;
         }},
        {"04 adjacency restriction, k <= 7", [] {
             for (int k = 1; k <= 7; ++k)
                 if (!embedding_check(k)) return false;
             return true;
         }},
        {"05 flip graph shape and faces", [] {
             for (int n = 2; n <= 9; ++n)
                 if (!verify_flip_graph_shape(n)) return false;
             for (int n = 1; n <= 8; ++n)
                 if (!embedding_check(n)) return false;
             return count_faces(2, 0) == 5 && count_faces(2, 1) == 5 &&
                    count_faces(2, 2) == 1;
         }},
        {"06 dihedral action and equivariance", [] {
             for (int n = 1; n <= 6; ++n)
                 if (!verify_dihedral(n)) return false;
             return verify_equivariance(8);
         }},
        {"07 exchange graph is the associahedron, n <= 4", [] {
             for (int n = 1; n <= 4; ++n)
                 if (!exchange_graph_is_associahedron(n)) return false;
             return true;
         }},
        {"08 Laurent phenomenon and positivity", [] {
             for (int n = 1; n <= 4; ++n)
                 if (!verify_laurent_phenomenon(n)) return false;
             return verify_ainfty_walks(200, 12);
         }},
        {"09 variable census, n <= 4", [] {
             for (int n = 1; n <= 4; ++n)
                 if (!verify_census(n)) return false;
             return true;
         }},
        {"10 cluster character theorem, n <= 4", [] {
             for (int n = 1; n <= 4; ++n)
                 if (!verify_cc(n)) return false;
             Laurent golden = div_exact(Laurent(1) + Laurent::x(1) + Laurent::x(2),
                                        Laurent::x(1) * Laurent::x(2));
             return cc_map(IntervalModule(quiver_An(2), 1, 2)) == golden;
         }},
        {"11 ambient stability and lazy seed properties", [] {
             return verify_cc_stability(6) && verify_gsv_lazy(200);
         }},
        {"12 alternating orientation schedules, n <= 8", [] {
             for (int n = 1; n <= 8; ++n)
                 if (!alt_equivalence_check(n)) return false;
             return true;
         }},
        {"13 windowed arcs reproduce polygon flips", [] {
             for (int N = 4; N <= 7; ++N)
                 if (!verify_arcs_polygon(N)) return false;
             return reachability_window_check(ArcFamily::fountain(0), -5, 5, 4);
         }},
        {"14 transposition breaks some flip edges", [] {
             for (int n = 1; n <= 6; ++n) {
                 for (const auto& p : enumerate_fitting(n))
                     if (!fits_in(transpose(p), n) || transpose(transpose(p)) != p)
                         return false;
             }
             bool some_defect = false;
             for (int n = 2; n <= 7; ++n)
                 if (!transpose_edge_defect(n).empty()) some_defect = true;
             return some_defect;
         }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            std::cout << "FAIL " << name << " (" << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
