#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ccx/arrangement.hpp"
#include "ccx/complexes.hpp"
#include "ccx/graph.hpp"
#include "ccx/hseries.hpp"
#include "ccx/macaulay.hpp"

using namespace ccx;

namespace {

bool all_pass = true;

void report(int id, const char* label, bool ok, long long ms, long long budget) {
    bool pass = ok && ms <= budget;
    if (!pass) all_pass = false;
    std::printf("[%2d] %-4s %-34s (%lld ms, budget %lld ms)%s\n", id,
                pass ? "PASS" : "FAIL", label, ms, budget,
                (ok && ms > budget) ? " [over budget]" : "");
}

template <typename F>
void criterion(int id, const char* label, long long budget_ms, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("[%2d] exception: %s\n", id, e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report(id, label, ok, ms, budget_ms);
}

IntSeq direct_h(const std::vector<ChainFace>& faces) {
    return faces.empty() ? IntSeq{1} : summarize(faces).h;
}

IntSeq truncate(IntSeq v, size_t len) {
    v.resize(len);
    return v;
}

// order-ideal oracle over monomials, duplicated here so the acceptance
// run does not depend on the unit-test sources
using Mono = std::vector<int>;

std::vector<Mono> monos_colex(int d, int nvars) {
    std::vector<Mono> out;
    Mono cur(d, 0);
    for (int top = 0; top < nvars; ++top) {
        cur.assign(d, 0);
        cur[d - 1] = top;
        auto inner = [&](auto&& self, int pos) -> void {
            if (pos < 0) {
                out.push_back(cur);
                return;
            }
            int hi = cur[pos + 1];
            for (int v = 0; v <= hi; ++v) {
                cur[pos] = v;
                self(self, pos - 1);
            }
        };
        if (d == 1) out.push_back(cur);
        else inner(inner, d - 2);
    }
    return out;
}

long colex_oracle(long h, int i, int nvars) {
    if (h == 0) return 0;
    auto all = monos_colex(i + 1, nvars);
    std::vector<Mono> seg;
    std::set<Mono> sh;
    long best = 0;
    for (const auto& m : all) {
        seg.push_back(m);
        for (size_t k = 0; k < m.size(); ++k) {
            Mono g = m;
            g.erase(g.begin() + k);
            sh.insert(g);
        }
        if (static_cast<long>(sh.size()) <= h)
            best = static_cast<long>(seg.size());
        else
            break;
    }
    return best;
}

int run_cli(const std::string& args) {
    std::string cmd =
        std::string(CCX_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
    criterion(1, "matroid h of rank-6 PG", 10, [] {
        Polynomial chi(IntSeq{-1024, 1984, -1240, 310, -31, 1});
        return extract_matroid_h(chi, 6).values[3] == -1678;
    });

    criterion(2, "full rank-3 signed arrangement", 1000, [] {
        auto [chi, r] = char_poly(full_bn(3));
        if (chi != Polynomial(IntSeq{-15, 23, -9, 1}) || r != 3) return false;
        auto h = extract_matroid_h(chi, 4).values;
        if (truncate(h, 3) != IntSeq{1, 6, 47}) return false;
        return !is_m_vector(IntSeq{1, 6, 47}).ok;
    });

    criterion(3, "parallel-connection matroid", 10, [] {
        auto h = extract_matroid_h(Polynomial::from_roots({1, 1, 1, 2, 8, 10}),
                                   7).values;
        if (truncate(h, 6) != IntSeq{1, 121, 472, 4424, 9167, 2375})
            return false;
        auto ced = ced_conditions(truncate(h, 6));
        if (!ced.monotone_ok || !ced.symmetric_ineq_ok) return false;
        return !is_m_vector(IntSeq{1, 120, 351, 3952}).ok;
    });

    criterion(4, "rank-6 signed extraction", 10, [] {
        auto h = extract_bn_h(Polynomial::from_roots({1, 2, 4, 8, 16, 32}), 6,
                              6).values;
        return h[1] == -3047 && h[3] == -65638;
    });

    auto graphs = corpus(7, 0);

    criterion(5, "coloring-complex bridge", 120000, [&] {
        for (const auto& g : graphs) {
            auto direct = double_cone_h(direct_h(build_coloring_complex(g)));
            if (direct != extract_color_h(chromatic_polynomial(g), g.n()).values)
                return false;
        }
        return true;
    });

    criterion(6, "unipolar bridge, all vertices", 180000, [&] {
        for (const auto& g : graphs) {
            auto formula =
                extract_unipolar_h(chromatic_polynomial(g), g.n()).values;
            for (int v = 1; v <= g.n(); ++v)
                if (direct_h(build_unipolar_complex(g, v)) != formula)
                    return false;
        }
        return true;
    });

    criterion(7, "signed restriction bridge", 120000, [] {
        for (int n = 2; n <= 3; ++n)
            for (const auto& a : enumerate_subarrangements(n)) {
                auto [chi, r] = char_poly(a);
                if (summarize(build_bn_restriction(a)).h !=
                    extract_bn_h(chi, r, n).values)
                    return false;
            }
        return true;
    });

    criterion(8, "wedge-of-spheres Betti numbers", 300000, [] {
        for (const auto& g : corpus(6, 0)) {
            auto b = reduced_betti(build_coloring_complex(g));
            BigInt top = acyclic_orientation_count(g) - 1;
            for (size_t k = 0; k < b.size(); ++k)
                if (b[k] != ((static_cast<int>(k) == g.n() - 2) ? top : 0))
                    return false;
        }
        return true;
    });

    criterion(9, "convex-ear inequalities", 120000, [&] {
        for (const auto& g : graphs) {
            auto p = chromatic_polynomial(g);
            auto color =
                truncate(extract_color_h(p, g.n()).values, g.n() - 1);
            if (!ced_conditions(color).all_ok()) return false;
            if (has_dominating_vertex(g)) {
                auto unip = extract_unipolar_h(p, g.n()).values;
                if (!ced_conditions(unip).all_ok()) return false;
            }
        }
        for (int n = 2; n <= 3; ++n)
            for (const auto& a : enumerate_subarrangements(n)) {
                auto [chi, r] = char_poly(a);
                if (!ced_conditions(extract_bn_h(chi, r, n).values).all_ok())
                    return false;
            }
        return true;
    });

    criterion(10, "order-ideal growth bound", 60000, [] {
        for (int i = 1; i <= 3; ++i) {
            int nvars = (i == 1) ? 33 : 12;
            for (long h = 0; h <= 30; ++h)
                if (macaulay_bound(h, i) != colex_oracle(h, i, nvars))
                    return false;
        }
        return true;
    });

    criterion(11, "verify-paper ledger and corruption", 60000, [] {
        if (run_cli("verify-paper") != 0) return false;
        for (const char* name : {"Ex-PG52.h3", "Ex-B3.chi", "Ex-parallel.g",
                                 "Ex-PG26.h1"})
            if (run_cli(std::string("verify-paper --corrupt ") + name) != 1)
                return false;
        return true;
    });

    std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
