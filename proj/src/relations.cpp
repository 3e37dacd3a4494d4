#include "strata/relations.hpp"

#include <algorithm>
#include <functional>

namespace strata {

namespace {

// Reads H symbols for one instance; remembers whether anything fell
// outside the tracked window.
class Reader {
public:
    explicit Reader(const StratumSpec& spec) : spec_(spec) {}

    void reset() { unknown_ = false; }
    bool unknown() const { return unknown_; }

    Poly operator()(int j, int k) {
        if (j < 0 || !spec_.is_basis_order(j)) return Poly();
        if (j > spec_.max_order || k > spec_.depth) {
            unknown_ = true;
            return Poly();
        }
        if (k >= 1) return Poly(VarId::H(j, k));
        int e = -k;
        bool shaped = e < j && std::binary_search(spec_.shape_exponents.begin(), spec_.shape_exponents.end(), e);
        return shaped ? Poly(VarId::H(j, k)) : Poly();
    }

private:
    const StratumSpec& spec_;
    bool unknown_ = false;
};

std::string idx(std::initializer_list<std::pair<const char*, int>> vals) {
    std::string s;
    for (const auto& [name, v] : vals) {
        if (!s.empty()) s += ',';
        s += std::string(name) + "=" + std::to_string(v);
    }
    return s;
}

class Collector {
public:
    Collector(const StratumSpec& spec, std::vector<PrintedRelation>& out) : h(spec), out_(out) {}

    Reader h;

    void add(const std::string& family, const std::string& instance, const std::function<Poly()>& build,
             bool suspect = false, const std::string& note = {}) {
        h.reset();
        Poly p = build();
        if (h.unknown()) return;
        if (p.is_zero() && !suspect) return;
        out_.push_back({family, instance, std::move(p), suspect, note});
    }

private:
    std::vector<PrintedRelation>& out_;
};

void sigma0(Collector& c, int B) {
    auto& h = c.h;
    for (int n = 0; 2 * n <= B * 2; ++n) {
        for (int i = 1; i <= B; ++i) {
            c.add("S0-even", idx({{"n", n}, {"i", i}}), [&] { return h(2 * n, i); });
            c.add("S0-even", idx({{"n", n}, {"i", i}, {"shift", 1}}), [&] { return h(2 * n + i, 2 * i); });
        }
    }
    for (int m = 0; m <= B; ++m) {
        for (int n = 0; n <= B; ++n) {
            for (int k = 0; k <= B; ++k) {
                c.add("S0-H/1", idx({{"m", m}, {"n", n}, {"k", k}}), [&] {
                    Poly r = h(2 * m + 1, 2 * (k + n) + 1) - h(2 * (m + n) + 1, 2 * k + 1);
                    for (int s = 0; s <= n - 1; ++s) r -= h(2 * m + 1, 2 * s + 1) * h(2 * (n - s) - 1, 2 * k + 1);
                    return r;
                });
                if (k < 1) continue;  // k = 0 is the z^0 coefficient, absorbed by p_0
                c.add("S0-H/2", idx({{"m", m}, {"n", n}, {"k", k}}), [&] {
                    Poly r = h(2 * m + 1, 2 * (k + n) + 1) + h(2 * n + 1, 2 * (k + m) + 1);
                    for (int l = 0; l <= k - 1; ++l) r += h(2 * m + 1, 2 * l + 1) * h(2 * n + 1, 2 * (k - l) - 1);
                    return r;
                });
            }
        }
    }
}

void sigma1(Collector& c, int B) {
    auto& h = c.h;
    for (int n = 1; n <= B; ++n) {
        for (int i = 1; i <= B; ++i) c.add("S1-even", idx({{"n", n}, {"i", i}}), [&] { return h(2 * n, i); });
        c.add("S1-p2n", idx({{"n", n}}), [&] {
            Poly r = h(2 * n, 0) + (-h(2, 0)).pow(static_cast<unsigned>(n));
            return r;
        });
    }
    c.add("S1-sample", "first", [&] { return h(1, 1).scaled(2) - h(2, 0) + h(1, 0).pow(2); }, true,
          "printed with +H[1,0]^2; the sign of the square conflicts with p2 = p1^2 - 2*H[1,0]*p1");
    c.add("S1-sample", "second", [&] { return h(3, 0) + h(1, 0) * h(2, 0) + h(1, 0) * h(1, 1); });
    for (int j = 1; j <= B; ++j) {
        for (int k = 1; k <= B; ++k) {
            c.add("S1-H/1", idx({{"j", j}, {"k", k}}), [&] { return h(2 * (j + k), 0) + h(2 * j, 0) * h(2 * k, 0); });
        }
    }
    // p_{2j} p_{2k+1}, constant term (j >= 1).
    for (int j = 1; j <= B; ++j) {
        for (int k = 0; k <= B; ++k) {
            c.add(
                "S1-H/2", idx({{"j", j}, {"k", k}}),
                [&] {
                    Poly r = h(2 * (k + j) + 1, 0) + h(2 * k + 1, 0) * h(2 * j, 0);
                    for (int l = 0; l <= j - 1; ++l) r += h(2 * k + 1, 2 * l + 1) * h(2 * (j - l) - 1, 0);
                    return r;
                },
                true, "printed H[2k+1,0]*H[2j+1,0]; read as H[2k+1,0]*H[2j,0]");
            // Coefficient of z^{-(2l+1)}.
            for (int l = 0; l <= B; ++l) {
                c.add(
                    "S1-H/3", idx({{"j", j}, {"k", k}, {"l", l}}),
                    [&] {
                        Poly r = h(2 * k + 1, 2 * (j + l) + 1) - h(2 * (k + j) + 1, 2 * l + 1);
                        for (int s = 0; s <= j - 1; ++s) r -= h(2 * k + 1, 2 * s + 1) * h(2 * (j - s) - 1, 2 * l + 1);
                        return r;
                    },
                    true,
                    "as printed the +/-H[2j,0]*H[2k+1,2l+1] pair cancels and H[2k+1,2(l+j)+1] repeats the leading term; "
                    "both dropped");
            }
        }
    }
    // p_{2j+1} p_{2k+1}: constant term, then the coefficient of z^{-2l}.
    for (int j = 0; j <= B; ++j) {
        for (int k = j; k <= B; ++k) {
            c.add(
                "S1-H/4", idx({{"j", j}, {"k", k}}),
                [&] {
                    Poly r = h(2 * (k + j + 1), 0) + h(2 * k + 1, 0) * h(2 * j + 1, 0) - h(2 * j + 1, 2 * k + 1) -
                             h(2 * k + 1, 2 * j + 1);
                    for (int s = 0; s <= k - 1; ++s) r += h(2 * (k - s), 0) * h(2 * j + 1, 2 * s + 1);
                    for (int s = 0; s <= j - 1; ++s) r += h(2 * (j - s), 0) * h(2 * k + 1, 2 * s + 1);
                    return r;
                },
                true, "printed without -H[2j+1,2k+1] - H[2k+1,2j+1]");
            for (int l = 1; l <= B; ++l) {
                c.add(
                    "S1-H/5", idx({{"j", j}, {"k", k}, {"l", l}}),
                    [&] {
                        Poly r = h(2 * j + 1, 2 * (l + k) + 1) + h(2 * k + 1, 2 * (l + j) + 1);
                        for (int s = 0; s <= l - 1; ++s) r += h(2 * j + 1, 2 * s + 1) * h(2 * k + 1, 2 * (l - s) - 1);
                        return r;
                    },
                    true, "printed with two extra sums -k*H[2j+1,2(l+k)+1] - j*H[2k+1,2(l+j)+1]; dropped");
            }
        }
    }
}

void sigma2(Collector& c, int B) {
    auto& h = c.h;
    for (int n = 0; n <= B; ++n) {
        for (int k : {-1, 1, 2, 3}) c.add("Heven-S2/1", idx({{"n", n}, {"k", k}}), [&] { return h(2 * n, k); });
    }
    for (int n = 1; n <= B; ++n) {
        for (int k = 1; k <= B; ++k) {
            c.add("Heven-S2/2", idx({{"n", n}, {"k", k}}), [&] { return h(2 * n + 1, 2 * k); }, true,
                  "printed H[2n+1,k] for every k >= 1; odd k would kill the independents H[3,1], H[3,3]; "
                  "read as H[2n+1,2k]");
        }
    }
    for (int m = 1; m <= B; ++m) {
        for (int n = 0; n <= B; ++n) {
            for (int k = -1; k <= B; ++k) {
                c.add(
                    "Hodd-S2/1", idx({{"m", m}, {"n", n}, {"k", k}}),
                    [&] {
                        Poly r = h(2 * m + 1, 2 * (k + n) + 1) - h(2 * (m + n) + 1, 2 * k + 1);
                        for (int s = -1; s <= n - 2; ++s) r -= h(2 * m + 1, 2 * s + 1) * h(2 * (n - s) - 1, 2 * k + 1);
                        return r;
                    },
                    true, "printed row index 2(n-s)+1 in the sum; read as 2(n-s)-1");
                if (n < 1 || k < 1) continue;  // k <= 0 lands on nonnegative even powers
                c.add(
                    "Hodd-S2/2", idx({{"m", m}, {"n", n}, {"k", k}}),
                    [&] {
                        Poly r = h(2 * m + 1, 2 * (n + k) + 1) + h(2 * n + 1, 2 * (m + k) + 1);
                        for (int s = -1; s <= k; ++s) r += h(2 * m + 1, 2 * s + 1) * h(2 * n + 1, 2 * (k - s) - 1);
                        return r;
                    },
                    true, "free index l on the right read as k");
            }
        }
    }
}

void sigma3(Collector& c, int B) {
    auto& h = c.h;
    auto g = nlin_s3_generators();
    c.add("nlin-S3", "1", [&] { return g[0]; });
    c.add("nlin-S3", "2", [&] { return g[1]; });
    for (int j = 5; j <= 5 + B; ++j) {
        c.add("pH-S3/1", idx({{"j", j}}), [&] { return h(j, -2) + h(j - 2, -2) * h(4, -2) - h(j - 2, 0); });
        c.add("pH-S3/2", idx({{"j", j}}), [&] { return h(j, 0) + h(j - 2, -2) * h(4, 0); });
    }
    for (int j = 3; j <= 3 + B; ++j) {
        for (int k = 1; k <= B + 1; ++k) c.add("p-S3", idx({{"j", j}, {"k", k}}), [&] { return h(j, k); });
    }
}

void sigma2n(Collector& c, int n, int B) {
    auto& h = c.h;
    for (int m = 0; m <= n + B; ++m) {
        for (int k = -2 * n + 2; k <= B; ++k) {
            if (k <= 0 && k % 2 != 0) continue;
            c.add("Heven-S2n/1", idx({{"m", m}, {"k", k}}), [&] { return h(2 * m, k); });
        }
        for (int k = -n; k <= B; ++k) c.add("Heven-S2n/2", idx({{"m", m}, {"k", k}}), [&] { return h(2 * m + 1, 2 * k); });
    }
    for (int j = n; j <= n + B; ++j) {
        for (int k = 0; k <= B; ++k) {
            for (int l = -n; l <= B; ++l) {
                c.add("H-S2n/1", idx({{"j", j}, {"k", k}, {"l", l}}), [&] {
                    Poly r = h(2 * j + 1, 2 * (l + k) + 1) - h(2 * (j + k) + 1, 2 * l + 1);
                    for (int s = -n; s <= k - 1; ++s) r -= h(2 * j + 1, 2 * s + 1) * h(2 * (k - s) - 1, 2 * l + 1);
                    return r;
                });
            }
        }
        // Coefficient of z^{-2l}; l <= 0 lands on nonnegative even powers.
        for (int k = n; k <= n + B; ++k) {
            for (int l = 1; l <= B; ++l) {
                c.add(
                    "H-S2n/2", idx({{"j", j}, {"k", k}, {"l", l}}),
                    [&] {
                        Poly r = h(2 * j + 1, 2 * (l + k) + 1) + h(2 * k + 1, 2 * (l + j) + 1);
                        for (int s = -n; s <= -1; ++s) r += h(2 * j + 1, 2 * s + 1) * h(2 * k + 1, 2 * (l - s) - 1);
                        for (int r2 = -n; r2 <= -1; ++r2) r += h(2 * k + 1, 2 * r2 + 1) * h(2 * j + 1, 2 * (l - r2) - 1);
                        for (int s = 0; s <= l - 1; ++s) r += h(2 * j + 1, 2 * s + 1) * h(2 * k + 1, 2 * (l - s) - 1);
                        return r;
                    },
                    n > 1, "printed upper limit l-n on the last sum; read as l-1");
            }
        }
    }
}

void sigma5(Collector& c, int B) {
    auto& h = c.h;
    c.add("fH-S5", "H[5,0]", [&] { return h(5, 0); });
    c.add("fH-S5", "H[5,-2]", [&] { return h(5, -2) - h(3, 0); });
    c.add("fH-S5", "H[5,-4]", [&] { return h(5, -4) - h(3, -2); });
    c.add("fH-S5", "H[6,0]", [&] { return h(6, 0) + h(3, 0).pow(2); });
    c.add("fH-S5", "H[6,-2]", [&] { return h(6, -2) + (h(3, 0) * h(3, -2)).scaled(2); });
    c.add("fH-S5", "H[6,-4]", [&] { return h(6, -4) + h(3, -2).pow(2); });
    for (int j : {3, 5, 6, 7}) {
        for (int k = 1; k <= B + 1; ++k) c.add("p-S5", idx({{"j", j}, {"k", k}}), [&] { return h(j, k); });
    }
}

}  // namespace

std::vector<Poly> nlin_s3_generators() {
    return {parse_poly("H[4,0] + 2*H[3,0]*H[3,-2] - H[3,-2]^2*H[4,-2] - H[4,-2]^2"),
            parse_poly("H[3,0]^2 - H[3,-2]^2*H[4,0] - H[4,-2]*H[4,0]")};
}

std::vector<PrintedRelation> printed_relations(const StratumSpec& spec, int bound) {
    std::vector<PrintedRelation> out;
    Collector c(spec, out);
    switch (spec.m) {
        case 0: sigma0(c, bound); break;
        case 1: sigma1(c, bound); break;
        case 2: sigma2(c, bound); break;
        case 3: sigma3(c, bound); break;
        case 5: sigma5(c, bound); break;
        default:
            if (spec.m % 2 == 0) sigma2n(c, spec.m / 2, bound);
            break;
    }
    return out;
}

}  // namespace strata
