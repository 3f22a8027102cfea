#include "polycosec/combinatorics.hpp"

#include <cassert>
#include <mutex>
#include <shared_mutex>

namespace polycosec {

namespace {

// One growable triangle (or row) per table, each behind its own lock.
// Extension of one table may read others; the dependency order
// (tangent -> stirling2/binomial/factorial, bernoulli -> binomial) is acyclic.
struct Triangle {
    std::shared_mutex mx;
    std::vector<std::vector<Integer>> rows;
};

struct Row {
    std::shared_mutex mx;
    std::vector<Rational> values;
};

struct IntRow {
    std::shared_mutex mx;
    std::vector<Integer> values;
};

Triangle g_binomial;
Triangle g_stirling1;
Triangle g_stirling2;
Triangle g_tangent;
Row g_bernoulli;
IntRow g_factorial;

template <typename Table, typename Extend>
void ensure(Table& t, std::size_t count, Extend extend) {
    {
        std::shared_lock lk(t.mx);
        if (size(t) >= count)
            return;
    }
    std::unique_lock lk(t.mx);
    extend(count);
}

std::size_t size(const Triangle& t) { return t.rows.size(); }
std::size_t size(const Row& t) { return t.values.size(); }
std::size_t size(const IntRow& t) { return t.values.size(); }

void extend_factorial(std::size_t count) {
    auto& v = g_factorial.values;
    if (v.empty())
        v.push_back(1);
    while (v.size() < count)
        v.push_back(v.back() * Integer(static_cast<unsigned long>(v.size())));
}

void extend_binomial(std::size_t count) {
    auto& rows = g_binomial.rows;
    if (rows.empty())
        rows.push_back({Integer(1)});
    while (rows.size() < count) {
        const auto& prev = rows.back();
        std::vector<Integer> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t j = 1; j < prev.size(); ++j)
            row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
}

void extend_stirling2(std::size_t count) {
    auto& rows = g_stirling2.rows;
    if (rows.empty())
        rows.push_back({Integer(1)});
    while (rows.size() < count) {
        const auto& prev = rows.back();
        const std::size_t n = rows.size();
        std::vector<Integer> row(n + 1);
        row[0] = 0;
        row[n] = 1;
        for (std::size_t m = 1; m < n; ++m)
            row[m] = Integer(static_cast<unsigned long>(m)) * prev[m] + prev[m - 1];
        rows.push_back(std::move(row));
    }
}

void extend_stirling1(std::size_t count) {
    auto& rows = g_stirling1.rows;
    if (rows.empty())
        rows.push_back({Integer(1)});
    while (rows.size() < count) {
        const auto& prev = rows.back();
        const std::size_t n = rows.size();
        std::vector<Integer> row(n + 1);
        row[0] = 0;
        row[n] = 1;
        for (std::size_t m = 1; m < n; ++m)
            row[m] = Integer(static_cast<unsigned long>(n - 1)) * prev[m] + prev[m - 1];
        rows.push_back(std::move(row));
    }
}

void extend_bernoulli(std::size_t count) {
    auto& v = g_bernoulli.values;
    if (v.empty())
        v.push_back(Rational(1));
    // Classical recurrence yields B(1) = -1/2; the stored convention is +1/2.
    while (v.size() < count) {
        const long n = static_cast<long>(v.size());
        Rational acc;
        for (long j = 0; j < n; ++j) {
            Rational bj = (j == 1) ? Rational(-1, 2) : v[static_cast<std::size_t>(j)];
            acc += Rational(binomial(n + 1, j)) * bj;
        }
        Rational bn = -acc / Rational(n + 1);
        if (n == 1)
            bn = Rational(1, 2);
        v.push_back(bn);
    }
}

Integer tangent_cell(long n, long m) {
    // i^(n-m) realized as a parity-gated sign; the summation itself is
    // the alternating Stirling sum divided by m!.
    if (n < m || ((n - m) % 2) != 0)
        return 0;
    Integer acc = 0;
    for (long p = m; p <= n; ++p) {
        Integer term = factorial(p) * binomial(p - 1, m - 1) * stirling2(n, p);
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - p));
        if (((n - p) % 2) != 0)
            two_pow = -two_pow;
        acc += two_pow * term;
    }
    if (((n - m) / 2) % 2 != 0)
        acc = -acc;
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), factorial(m).get_mpz_t());
    assert(sgn(r) == 0 && "higher-order tangent number must be an integer");
    return q;
}

void extend_tangent(std::size_t count) {
    auto& rows = g_tangent.rows;
    if (rows.empty())
        rows.push_back({});
    while (rows.size() < count) {
        const long n = static_cast<long>(rows.size());
        std::vector<Integer> row(static_cast<std::size_t>(n));
        for (long m = 1; m <= n; ++m)
            row[static_cast<std::size_t>(m - 1)] = tangent_cell(n, m);
        rows.push_back(std::move(row));
    }
}

std::vector<std::vector<std::string>> dump_triangle(Triangle& t) {
    std::shared_lock lk(t.mx);
    std::vector<std::vector<std::string>> out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) {
        std::vector<std::string> r;
        r.reserve(row.size());
        for (const auto& x : row)
            r.push_back(x.get_str());
        out.push_back(std::move(r));
    }
    return out;
}

Integer parse_integer(const std::string& s) {
    Integer x;
    if (mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed integer entry: " + s);
    return x;
}

void preload_triangle(Triangle& t, const std::vector<std::vector<std::string>>& rows,
                      std::size_t first_row_width) {
    std::vector<std::vector<Integer>> parsed;
    parsed.reserve(rows.size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const std::size_t expect = n == 0 ? first_row_width : rows[n - 1].size() + 1;
        if (rows[n].size() != expect)
            throw std::invalid_argument("malformed table row");
        std::vector<Integer> row;
        row.reserve(rows[n].size());
        for (const auto& s : rows[n])
            row.push_back(parse_integer(s));
        parsed.push_back(std::move(row));
    }
    std::unique_lock lk(t.mx);
    if (parsed.size() > t.rows.size())
        t.rows = std::move(parsed);
}

} // namespace

Integer factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial of a negative argument");
    ensure(g_factorial, static_cast<std::size_t>(n) + 1, extend_factorial);
    std::shared_lock lk(g_factorial.mx);
    return g_factorial.values[static_cast<std::size_t>(n)];
}

Integer binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial with negative n");
    if (k < 0 || k > n)
        return 0;
    ensure(g_binomial, static_cast<std::size_t>(n) + 1, extend_binomial);
    std::shared_lock lk(g_binomial.mx);
    return g_binomial.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling2(long n, long m) {
    if (n < 0)
        throw std::domain_error("stirling2 with negative n");
    if (m < 0 || m > n)
        return 0;
    ensure(g_stirling2, static_cast<std::size_t>(n) + 1, extend_stirling2);
    std::shared_lock lk(g_stirling2.mx);
    return g_stirling2.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

Integer stirling1_unsigned(long n, long m) {
    if (n < 0)
        throw std::domain_error("stirling1 with negative n");
    if (m < 0 || m > n)
        return 0;
    ensure(g_stirling1, static_cast<std::size_t>(n) + 1, extend_stirling1);
    std::shared_lock lk(g_stirling1.mx);
    return g_stirling1.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

Rational bernoulli(long n) {
    if (n < 0)
        throw std::domain_error("bernoulli with negative index");
    ensure(g_bernoulli, static_cast<std::size_t>(n) + 1, extend_bernoulli);
    std::shared_lock lk(g_bernoulli.mx);
    return g_bernoulli.values[static_cast<std::size_t>(n)];
}

Integer tangent_higher(long n, long m) {
    if (n < 0)
        throw std::domain_error("tangent_higher with negative n");
    if (m < 1)
        throw std::domain_error("tangent_higher requires m >= 1");
    if (m > n || ((n - m) % 2) != 0)
        return 0;
    ensure(g_tangent, static_cast<std::size_t>(n) + 1, extend_tangent);
    std::shared_lock lk(g_tangent.mx);
    return g_tangent.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m - 1)];
}

CombTablesDump dump_comb_tables() {
    CombTablesDump d;
    d.binomial = dump_triangle(g_binomial);
    d.stirling1_unsigned = dump_triangle(g_stirling1);
    d.stirling2 = dump_triangle(g_stirling2);
    d.tangent_higher = dump_triangle(g_tangent);
    {
        std::shared_lock lk(g_bernoulli.mx);
        for (const auto& x : g_bernoulli.values)
            d.bernoulli.push_back(x.str());
    }
    return d;
}

void preload_comb_tables(const CombTablesDump& dump) {
    preload_triangle(g_binomial, dump.binomial, 1);
    preload_triangle(g_stirling1, dump.stirling1_unsigned, 1);
    preload_triangle(g_stirling2, dump.stirling2, 1);
    preload_triangle(g_tangent, dump.tangent_higher, 0);
    std::vector<Rational> parsed;
    parsed.reserve(dump.bernoulli.size());
    for (const auto& s : dump.bernoulli)
        parsed.push_back(Rational::parse(s));
    std::unique_lock lk(g_bernoulli.mx);
    if (parsed.size() > g_bernoulli.values.size())
        g_bernoulli.values = std::move(parsed);
}

void clear_comb_tables() {
    { std::unique_lock lk(g_binomial.mx); g_binomial.rows.clear(); }
    { std::unique_lock lk(g_stirling1.mx); g_stirling1.rows.clear(); }
    { std::unique_lock lk(g_stirling2.mx); g_stirling2.rows.clear(); }
    { std::unique_lock lk(g_tangent.mx); g_tangent.rows.clear(); }
    { std::unique_lock lk(g_bernoulli.mx); g_bernoulli.values.clear(); }
    { std::unique_lock lk(g_factorial.mx); g_factorial.values.clear(); }
}

} // namespace polycosec
