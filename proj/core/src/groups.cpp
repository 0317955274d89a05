#include "cliffork/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cliffork {

int GroupTable::inverse(int a) const {
    for (std::size_t b = 0; b < size(); ++b)
        if (table[a][b] == neutral) return static_cast<int>(b);
    throw std::logic_error("element without inverse");
}

int GroupTable::element_order(int a) const {
    int x = a;
    for (int k = 1; k <= static_cast<int>(size()); ++k) {
        if (x == neutral) return k;
        x = table[x][a];
    }
    throw std::logic_error("element order exceeds group size");
}

GroupTable generate_group(const std::vector<Matrix>& generators, const std::vector<std::string>& labels,
                          std::size_t bound) {
    const std::size_t dim = generators.empty() ? 1 : generators.front().dim();
    std::vector<std::string> gen_labels = labels;
    for (std::size_t i = gen_labels.size(); i < generators.size(); ++i) gen_labels.push_back("g" + std::to_string(i + 1));

    std::vector<Matrix> elems{Matrix::identity(dim)};
    std::vector<std::string> names{"1"};
    std::unordered_map<Matrix, int, MatrixHash> index{{elems.front(), 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            Matrix y = elems[head] * generators[g];
            if (index.contains(y)) continue;
            if (elems.size() >= bound) throw GroupClosureError("group closure exceeds " + std::to_string(bound) + " elements");
            index.emplace(y, static_cast<int>(elems.size()));
            names.push_back(head == 0 ? gen_labels[g] : names[head] + "*" + gen_labels[g]);
            elems.push_back(std::move(y));
        }
    }

    GroupTable t;
    t.labels = std::move(names);
    t.neutral = 0;
    const std::size_t n = elems.size();
    t.table.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(elems[i] * elems[j]);
            if (it == index.end()) throw GroupClosureError("generators are not invertible");
            t.table[i][j] = it->second;
        }
    }
    return t;
}

namespace {

int signed_key(const SignedBlade& s) { return static_cast<int>(s.blade.bits() << 1) | (s.sign < 0 ? 1 : 0); }

std::vector<SignedBlade> close_signed_blades(const std::vector<SignedBlade>& generators, const Signature& sig,
                                             std::size_t bound) {
    std::vector<SignedBlade> elems{SignedBlade{Blade(0), 1}};
    std::unordered_map<int, int> index{{signed_key(elems.front()), 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const SignedBlade& g : generators) {
            SignedBlade y = blade_product(elems[head].blade, g.blade, sig);
            y.sign *= elems[head].sign * g.sign;
            if (index.contains(signed_key(y))) continue;
            if (elems.size() >= bound) throw GroupClosureError("group closure exceeds " + std::to_string(bound) + " elements");
            index.emplace(signed_key(y), static_cast<int>(elems.size()));
            elems.push_back(y);
        }
    }
    return elems;
}

GroupTable signed_blade_table(const std::vector<SignedBlade>& elems, const Signature& sig) {
    std::unordered_map<int, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(signed_key(elems[i]), static_cast<int>(i));
    GroupTable t;
    for (const auto& e : elems) t.labels.push_back((e.sign < 0 ? "-" : "") + e.blade.to_string());
    const std::uint32_t neg = sig.negative_mask();
    const std::size_t n = elems.size();
    t.table.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t a = elems[i].blade.bits();
            const std::uint32_t b = elems[j].blade.bits();
            const int sign = blade_product_sign(a, b, neg) * elems[i].sign * elems[j].sign;
            t.table[i][j] = index.at(signed_key(SignedBlade{Blade(a ^ b), sign}));
        }
    }
    t.neutral = index.at(signed_key(SignedBlade{Blade(0), 1}));
    return t;
}

}  // namespace

GroupTable generate_group(const std::vector<SignedBlade>& generators, const Signature& sig, std::size_t bound) {
    for (const auto& g : generators) {
        if ((g.blade.bits() & ~sig.full_mask()) != 0) throw std::out_of_range("generator blade outside " + sig.to_string());
    }
    return signed_blade_table(close_signed_blades(generators, sig, bound), sig);
}

std::string OrderStructure::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [order, count] : counts) {
        if (!first) os << ' ';
        first = false;
        os << order << ':' << count;
    }
    return os.str();
}

OrderStructure order_structure(const GroupTable& g) {
    OrderStructure s;
    for (std::size_t i = 0; i < g.size(); ++i) ++s.counts[g.element_order(static_cast<int>(i))];
    return s;
}

bool is_abelian(const GroupTable& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.table[i][j] != g.table[j][i]) return false;
    return true;
}

std::vector<int> group_center(const GroupTable& g) {
    std::vector<int> z;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool central = true;
        for (std::size_t j = 0; j < g.size() && central; ++j) central = g.table[i][j] == g.table[j][i];
        if (central) z.push_back(static_cast<int>(i));
    }
    return z;
}

GroupTable quotient_table(const GroupTable& g, const std::vector<int>& normal) {
    const std::size_t n = g.size();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(x));
        for (int h : normal) {
            const int y = g.table[x][h];
            if (coset_of[y] >= 0 && coset_of[y] != id) throw std::invalid_argument("subgroup cosets overlap");
            coset_of[y] = id;
        }
    }
    GroupTable q;
    for (int r : reps) q.labels.push_back(g.labels.empty() ? std::to_string(r) : g.labels[r]);
    q.table.assign(reps.size(), std::vector<int>(reps.size()));
    for (std::size_t a = 0; a < reps.size(); ++a) {
        for (std::size_t b = 0; b < reps.size(); ++b) q.table[a][b] = coset_of[g.table[reps[a]][reps[b]]];
    }
    // Well-definedness: every pair of coset members multiplies into the same coset.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (coset_of[g.table[x][y]] != q.table[coset_of[x]][coset_of[y]])
                throw std::invalid_argument("subgroup is not normal");
    q.neutral = coset_of[g.neutral];
    return q;
}

bool is_elementary_abelian_2(const GroupTable& g) {
    if (!is_abelian(g)) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.table[i][i] != g.neutral) return false;
    return true;
}

GroupTable permuted(const GroupTable& g, const std::vector<int>& perm) {
    const std::size_t n = g.size();
    GroupTable out;
    out.labels.resize(n);
    out.table.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        out.labels[perm[i]] = g.labels.empty() ? std::to_string(i) : g.labels[i];
        for (std::size_t j = 0; j < n; ++j) out.table[perm[i]][perm[j]] = perm[g.table[i][j]];
    }
    out.neutral = perm[g.neutral];
    return out;
}

namespace {

std::vector<int> generating_set(const GroupTable& g) {
    std::vector<int> by_order(g.size());
    std::iota(by_order.begin(), by_order.end(), 0);
    std::vector<int> orders(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) orders[i] = g.element_order(static_cast<int>(i));
    std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) { return orders[a] > orders[b]; });

    std::vector<int> gens;
    std::vector<bool> in_sub(g.size(), false);
    in_sub[g.neutral] = true;
    std::size_t sub_size = 1;
    for (int x : by_order) {
        if (sub_size == g.size()) break;
        if (in_sub[x]) continue;
        gens.push_back(x);
        std::vector<int> members;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (in_sub[i]) members.push_back(static_cast<int>(i));
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int s : gens) {
                const int y = g.table[members[head]][s];
                if (!in_sub[y]) {
                    in_sub[y] = true;
                    members.push_back(y);
                }
            }
        }
        sub_size = members.size();
    }
    return gens;
}

bool extend_to_isomorphism(const GroupTable& a, const GroupTable& b, const std::vector<int>& gens,
                           const std::vector<int>& images) {
    const std::size_t n = a.size();
    std::vector<int> map(n, -1);
    map[a.neutral] = b.neutral;
    std::vector<int> queue{a.neutral};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (std::size_t t = 0; t < gens.size(); ++t) {
            const int y = a.table[x][gens[t]];
            const int img = b.table[map[x]][images[t]];
            if (map[y] < 0) {
                map[y] = img;
                queue.push_back(y);
            } else if (map[y] != img) {
                return false;
            }
        }
    }
    std::vector<bool> hit(n, false);
    for (int v : map) {
        if (v < 0 || hit[v]) return false;
        hit[v] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (map[a.table[x][y]] != b.table[map[x]][map[y]]) return false;
    return true;
}

}  // namespace

bool is_isomorphic(const GroupTable& a, const GroupTable& b) {
    if (a.size() != b.size()) return false;
    if (is_abelian(a) != is_abelian(b)) return false;
    if (!(order_structure(a) == order_structure(b))) return false;
    if (group_center(a).size() != group_center(b).size()) return false;

    const std::vector<int> gens = generating_set(a);
    std::vector<int> b_orders(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) b_orders[i] = b.element_order(static_cast<int>(i));
    std::vector<int> images;
    std::function<bool(std::size_t)> search = [&](std::size_t idx) {
        if (idx == gens.size()) return extend_to_isomorphism(a, b, gens, images);
        const int want = a.element_order(gens[idx]);
        for (std::size_t h = 0; h < b.size(); ++h) {
            if (b_orders[h] != want) continue;
            images.push_back(static_cast<int>(h));
            if (search(idx + 1)) return true;
            images.pop_back();
        }
        return false;
    };
    return search(0);
}

GroupTable metacyclic_group(int m, int k, int t, int r) {
    if (m < 1 || k < 1) throw std::invalid_argument("metacyclic parameters must be positive");
    std::vector<int> rpow(k + 1, 1 % m);
    for (int j = 1; j <= k; ++j) rpow[j] = (rpow[j - 1] * r) % m;
    if (rpow[k] != 1 % m || ((r * t - t) % m + m) % m != 0) throw std::invalid_argument("inconsistent metacyclic presentation");
    GroupTable g;
    const int n = m * k;
    g.table.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        g.labels.push_back("a^" + std::to_string(x / k) + "x^" + std::to_string(x % k));
        for (int y = 0; y < n; ++y) {
            const int i1 = x / k, j1 = x % k, i2 = y / k, j2 = y % k;
            int i = i1 + rpow[j1] * i2;
            int j = j1 + j2;
            if (j >= k) {
                j -= k;
                i += t;
            }
            i = ((i % m) + m) % m;
            g.table[x][y] = i * k + j;
        }
    }
    g.neutral = 0;
    return g;
}

GroupTable cyclic_group(int n) { return metacyclic_group(n, 1, 0, 1); }

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    GroupTable g;
    g.table.assign(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x) {
        g.labels.push_back("(" + std::to_string(x / nb) + "," + std::to_string(x % nb) + ")");
        for (int y = 0; y < na * nb; ++y) {
            g.table[x][y] = a.table[x / nb][y / nb] * nb + b.table[x % nb][y % nb];
        }
    }
    g.neutral = a.neutral * nb + b.neutral;
    return g;
}

namespace {

// N x| Z2 where the nontrivial element acts by the automorphism phi of N.
GroupTable semidirect_z2(const GroupTable& n, const std::vector<int>& phi) {
    const int nn = static_cast<int>(n.size());
    GroupTable g;
    g.table.assign(2 * nn, std::vector<int>(2 * nn));
    for (int x = 0; x < 2 * nn; ++x) {
        g.labels.push_back(std::to_string(x));
        for (int y = 0; y < 2 * nn; ++y) {
            const int s = x / nn, t = y / nn;
            const int yy = s ? phi[y % nn] : y % nn;
            g.table[x][y] = ((s + t) % 2) * nn + n.table[x % nn][yy];
        }
    }
    g.neutral = n.neutral;
    return g;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    const GroupTable z2 = cyclic_group(2);
    const GroupTable z4 = cyclic_group(4);
    const GroupTable d4 = metacyclic_group(4, 2, 0, 3);
    const GroupTable q4 = metacyclic_group(4, 2, 2, 3);
    const GroupTable z2z2 = direct_product(z2, z2);
    const GroupTable z4z2 = direct_product(z4, z2);

    c.push_back({"1", cyclic_group(1)});
    c.push_back({"Z2", z2});
    c.push_back({"Z4", z4});
    c.push_back({"Z2xZ2", z2z2});
    c.push_back({"Z8", cyclic_group(8)});
    c.push_back({"Z4xZ2", z4z2});
    c.push_back({"Z2xZ2xZ2", direct_product(z2z2, z2)});
    c.push_back({"D4", d4});
    c.push_back({"Q4", q4});

    c.push_back({"Z16", cyclic_group(16)});
    c.push_back({"Z8xZ2", direct_product(cyclic_group(8), z2)});
    c.push_back({"Z4xZ4", direct_product(z4, z4)});
    c.push_back({"Z4xZ2xZ2", direct_product(z4z2, z2)});
    c.push_back({"Z2xZ2xZ2xZ2", direct_product(z2z2, z2z2)});
    c.push_back({"D4xZ2", direct_product(d4, z2)});
    c.push_back({"Q4xZ2", direct_product(q4, z2)});
    {
        // Pauli group: central product of Z4 and D4.
        const Gaussian i = Gaussian::i();
        const Matrix x = Matrix::from_rows({{0, 1}, {1, 0}});
        const Matrix z = Matrix::from_rows({{1, 0}, {0, -1}});
        const Matrix s = Matrix::scalar(2, i);
        c.push_back({"Z4oD4", generate_group({x, z, s})});
    }
    c.push_back({"D8", metacyclic_group(8, 2, 0, 7)});
    c.push_back({"SD16", metacyclic_group(8, 2, 0, 3)});
    c.push_back({"M16", metacyclic_group(8, 2, 0, 5)});
    c.push_back({"Q8", metacyclic_group(8, 2, 4, 7)});
    c.push_back({"Z4:Z4", metacyclic_group(4, 4, 0, 3)});
    {
        // (Z4 x Z2) x| Z2 with a -> ab, b -> b. Elements of Z4 x Z2 are 2*i + j for a^i b^j.
        std::vector<int> phi(8);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) phi[2 * i + j] = 2 * i + ((i + j) % 2);
        c.push_back({"(Z4xZ2):Z2", semidirect_z2(z4z2, phi)});
    }
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

std::string identify_small_group(const GroupTable& g) {
    if (g.size() > 16) throw std::out_of_range("group of order " + std::to_string(g.size()) + " is outside the catalog");
    for (const auto& entry : small_group_catalog()) {
        if (is_isomorphic(g, entry.table)) return entry.name;
    }
    throw std::out_of_range("group of order " + std::to_string(g.size()) + " not found in the catalog");
}

VeeGroup vee_group(const Signature& sig) {
    if (sig.complex()) throw std::invalid_argument("vee groups are defined for real signatures");
    if (sig.n() > 8) throw std::invalid_argument("vee_group supports p+q <= 8");
    std::vector<SignedBlade> gens{SignedBlade{Blade(0), -1}};
    for (int i = 1; i <= sig.n(); ++i) gens.push_back(SignedBlade{Blade::generator(i), 1});
    VeeGroup v;
    v.sig = sig;
    v.elements = close_signed_blades(gens, sig, kClosureBound);
    v.table = signed_blade_table(v.elements, sig);
    return v;
}

VeeFactorReport vee_factor_check(const Signature& sig) {
    const VeeGroup v = vee_group(sig);
    VeeFactorReport r;
    r.sig = sig;
    r.group_order = v.table.size();
    const std::vector<int> z = group_center(v.table);
    r.center_order = z.size();
    const GroupTable factor = quotient_table(v.table, z);
    r.factor_order = factor.size();
    r.elementary_abelian = is_elementary_abelian_2(factor);
    r.predicted_factor_order = salingaros_factor_order(sig);
    r.predicted_center = group_center_type(sig);
    if (z.size() == 2) {
        r.computed_center = "Z2";
    } else if (z.size() == 4) {
        bool has_order4 = false;
        for (int x : z) has_order4 = has_order4 || v.table.element_order(x) == 4;
        r.computed_center = has_order4 ? "Z4" : "Z2xZ2";
    } else {
        r.computed_center = "order " + std::to_string(z.size());
    }
    r.center_matches = r.computed_center == center_name(r.predicted_center);
    return r;
}

std::vector<std::vector<std::string>> signed_product_table(const std::vector<Matrix>& elems,
                                                           const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> out(elems.size(), std::vector<std::string>(elems.size(), "?"));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const Matrix prod = elems[i] * elems[j];
            for (std::size_t k = 0; k < elems.size(); ++k) {
                const int c = prod.compare_up_to_sign(elems[k]);
                if (c != 0) {
                    out[i][j] = (c < 0 ? "-" : "") + labels[k];
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace cliffork
