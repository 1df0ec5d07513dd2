#include "bs5/coeffs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bs5 {

void CoeffTable::set(int i, int j, Rational v) {
    if (v == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(v);
}

void CoeffTable::check_invariants() const {
    for (const auto& [key, v] : entries_) {
        auto [i, j] = key;
        if (v == 0) continue;
        if (i == 0) throw std::logic_error("coefficient table: a_{0,j} must vanish");
        if (i == 1 && j == 0 && k_ >= 2)
            throw std::logic_error("coefficient table: a_{1,0} must vanish for k >= 2");
        if (i > 3 * k_ || j > 3 * k_ - 1) {
            std::ostringstream msg;
            msg << "coefficient table: support bound violated at (i,j)=(" << i << "," << j
                << "), k=" << k_;
            throw std::logic_error(msg.str());
        }
    }
}

CoeffTable seed_table_k1() {
    CoeffTable t(1);
    t.set(1, 0, rat(1));
    t.set(2, 0, rat(-1));
    t.set(3, 0, rat(1, 3));
    return t;
}

CoeffTable advance(const CoeffTable& table) {
    if (table.k() < 1) throw std::invalid_argument("advance: table.k must be >= 1");
    table.check_invariants();

    const int k = table.k();
    const int p_max = 3 * k + 1;  // literal upper limit of the sum_p terms
    const int i_max = 3 * (k + 1);
    const int j_max = 3 * (k + 1) - 1;
    auto a = [&table](int i, int j) -> const Rational& { return table.at(i, j); };

    CoeffTable next(k + 1);

    // i=1 row: needs only step-k data.
    for (int j = 1; j <= j_max; ++j) {
        Rational s{0};
        for (int p = 0; p <= p_max; ++p) s += a(j, p) / Rational(p + 1);
        for (int p = 0; p <= j - 1; ++p)
            s += Rational(2 * p - j + 1, (p + 1) * (j - p)) * a(j - 1 - p, p);
        next.set(1, j, s);
    }
    // i=2 row: uses the freshly computed a_{1,j,k+1}.
    for (int j = 1; j <= j_max; ++j)
        next.set(2, j, a(1, j) - rat(1, 2) * next.at(1, j));
    // i>=3 rows.
    for (int i = 3; i <= i_max; ++i)
        for (int j = 1; j <= j_max; ++j) {
            Rational s = a(i - 1, j) - (Rational(1) + Rational(1, i * (i - 1))) * a(i - 2, j) +
                         (Rational(1, 3) + Rational(1, i * (i - 2))) * a(i - 3, j);
            next.set(i, j, s);
        }

    // j=0 column. The a_{1,0,k} term is nonzero only for the k=1 seed; it
    // restores the appendix value a_{2,0,2}=3 which the bare sum misses.
    {
        Rational s{0};
        for (int p = 0; p <= p_max; ++p) s += a(1, p) / Rational(p + 1);
        next.set(2, 0, 2 * s + a(1, 0));
    }
    for (int i = 3; i <= i_max; ++i) {
        Rational s = a(i - 1, 0) - (Rational(1) + Rational(1, (i - 1) * i)) * a(i - 2, 0) +
                     (Rational(1, 3) + Rational(1, (i - 2) * i)) * a(i - 3, 0);
        Rational s1{0}, s2{0};
        for (int p = 0; p <= p_max; ++p) {
            s1 += a(i - 1, p) / Rational(p + 1);
            s2 += a(i - 2, p) / Rational(p + 1);
        }
        s += Rational(i + 2, i) * s1 - Rational(i + 4, 2 * i) * s2;
        for (int p = 0; p <= i - 2; ++p)
            s -= Rational(i + 2, i) * a(i - 2 - p, p) / Rational(p + 1);
        for (int p = 0; p <= i - 3; ++p)
            s += Rational(i + 4, 2 * i) * a(i - 3 - p, p) / Rational(p + 1);
        for (int p = 0; p <= i - 2; ++p) s += a(i - 2 - p, p) / Rational(i - p);
        for (int p = 0; p <= i - 3; ++p) s -= rat(1, 2) * a(i - 3 - p, p) / Rational(i - p);
        next.set(i, 0, s);
    }

    next.check_invariants();
    return next;
}

const Rational& LimitTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    if (it == entries.end()) {
        std::ostringstream msg;
        msg << "limit table: beta_{" << i << "," << j << "} not stabilized at k_used=" << k_used;
        throw std::runtime_error(msg.str());
    }
    return it->second;
}

LimitTable limits(int k_max) {
    if (k_max < 2) throw std::invalid_argument("limits: k_max must be >= 2");
    CoeffTable prev = seed_table_k1();
    for (int k = 1; k < k_max - 1; ++k) prev = advance(prev);
    CoeffTable last = advance(prev);  // step k_max

    LimitTable lt;
    lt.k_used = k_max;
    for (const auto& [key, v] : last.entries()) {
        auto [i, j] = key;
        if (i + j + 1 <= k_max) lt.entries[key] = v;
    }
    // Entries absent from the sparse map but within the stabilized range are
    // exact zeros; they stay absent (at() of a CoeffTable treats them as 0,
    // the LimitTable records only nonzero limits plus explicit zeros below).
    for (const auto& [key, v] : lt.entries) {
        auto [i, j] = key;
        if (i + j + 1 <= k_max - 1 && v != prev.at(i, j)) {
            std::ostringstream msg;
            msg << "stabilization violated at (i,j)=(" << i << "," << j << ") between k="
                << k_max - 1 << " and k=" << k_max;
            throw std::runtime_error(msg.str());
        }
    }
    // Explicit zeros for the i=1 row so boundary_conditions can rely on them.
    for (int j = 0; 1 + j + 1 <= k_max; ++j)
        if (!lt.entries.count({1, j})) lt.entries[{1, j}] = Rational(0);
    return lt;
}

double eval_qk(const CoeffTable& table, double x, double y) {
    double s = 0.0;
    for (const auto& [key, v] : table.entries()) {
        auto [i, j] = key;
        double t = to_double(v);
        for (int n = 0; n < i; ++n) t *= x;
        for (int n = 0; n < j; ++n) t *= y;
        s += t;
    }
    return s;
}

Rational integral_gk(const CoeffTable& table) {
    Rational s{0};
    for (const auto& [key, v] : table.entries()) {
        auto [i, j] = key;
        s += v / Rational((i + 1) * (i + j + 2));
    }
    return 10 * s;
}

Polynomial marginal_poly_k(const CoeffTable& table) {
    Polynomial p;
    p.add_term(0, rat(3, 5));
    for (const auto& [key, v] : table.entries()) {
        auto [i, j] = key;
        // 2 * int_0^x y^i x^j dy = 2 a x^{i+j+1} / (i+1)
        p.add_term(i + j + 1, 2 * v / Rational(i + 1));
        // 2 * int_x^1 x^i y^j dy = 2 a x^i (1 - x^{j+1}) / (j+1)
        p.add_term(i, 2 * v / Rational(j + 1));
        p.add_term(i + j + 1, -2 * v / Rational(j + 1));
    }
    return p;
}

std::array<Rational, 5> boundary_conditions_from_limits(const LimitTable& lt) {
    for (int j = 0; j <= 3; ++j)
        if (!lt.contains(1, j))
            throw std::runtime_error("boundary conditions need beta_{1,0..3}; increase k_max");
    return {rat(1, 5), lt.at(1, 0), -lt.at(1, 1), 2 * lt.at(1, 2), -6 * lt.at(1, 3)};
}

void write_csv(const CoeffTable& table, std::ostream& os) {
    os << "i,j,value\n";
    for (const auto& [key, v] : table.entries())
        os << key.first << "," << key.second << "," << to_string(v) << "\n";
}

CoeffTable read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("i,j,value", 0) != 0)
        throw std::runtime_error("coefficient csv: missing header");
    // k is recovered from the support bound below.
    std::map<CoeffTable::Key, Rational> entries;
    int max_i = 1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fi, fj, fv;
        if (!std::getline(ls, fi, ',') || !std::getline(ls, fj, ',') || !std::getline(ls, fv))
            throw std::runtime_error("coefficient csv: bad row: " + line);
        int i = std::stoi(fi), j = std::stoi(fj);
        entries[{i, j}] = parse_rational(fv);
        if (i > max_i) max_i = i;
    }
    CoeffTable t((max_i + 2) / 3);
    for (auto& [key, v] : entries) t.set(key.first, key.second, std::move(v));
    return t;
}

std::string to_json(const CoeffTable& table) {
    nlohmann::json j;
    j["k"] = table.k();
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, v] : table.entries())
        j["entries"].push_back({{"i", key.first}, {"j", key.second}, {"value", to_string(v)}});
    return j.dump(2);
}

CoeffTable table_from_json(const std::string& json) {
    auto j = nlohmann::json::parse(json);
    CoeffTable t(j.at("k").get<int>());
    for (const auto& e : j.at("entries"))
        t.set(e.at("i").get<int>(), e.at("j").get<int>(),
              parse_rational(e.at("value").get<std::string>()));
    return t;
}

}  // namespace bs5
