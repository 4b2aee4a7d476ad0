#include "powersum/figurate.hpp"

#include <array>
#include <mutex>
#include <sstream>

namespace powersum::figurate {

namespace {

BigInt ipow(long base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exponent);
    return r;
}

BigInt triangular_literal(long n) { return sum_powers_range(1, 1, n); }

struct Entry {
    Identity id;
    std::string_view name;
    std::vector<std::string> params;
};

const std::array<Entry, 19>& registry() {
    static const std::array<Entry, 19> table{{
        {Identity::OddSumSquare, "ODD_SUM_SQUARE", {"n"}},
        {Identity::Triangular, "TRIANGULAR", {"n"}},
        {Identity::SumSquares, "SUM_SQUARES", {"n"}},
        {Identity::Archimedes, "ARCHIMEDES", {"n"}},
        {Identity::Nicomachus, "NICOMACHUS", {"n"}},
        {Identity::SquaresHalf, "SQUARES_HALF", {"n"}},
        {Identity::CubesClosed, "CUBES_CLOSED", {"n"}},
        {Identity::FourthFactored, "FOURTH_FACTORED", {"n"}},
        {Identity::FourthIntegerForm, "FOURTH_INTEGER_FORM", {"n"}},
        {Identity::RowsCols, "ROWS_COLS", {"p", "n"}},
        {Identity::Truncated, "TRUNCATED", {"p", "m", "n"}},
        {Identity::AlmostSquare, "ALMOST_SQUARE", {"m", "n"}},
        {Identity::FourthAsSqTimesSq, "FOURTH_AS_SQ_TIMES_SQ", {"n"}},
        {Identity::ArchimedesGen, "ARCHIMEDES_GEN", {"n"}},
        {Identity::Step2Split, "STEP2_SPLIT", {"n"}},
        {Identity::ScissorFactor, "SCISSOR_FACTOR", {"n"}},
        {Identity::TopLayerDouble, "TOP_LAYER_DOUBLE", {"n"}},
        {Identity::RBalance, "R_BALANCE", {"n"}},
        {Identity::FinalAssembly, "FINAL_ASSEMBLY", {"n"}},
    }};
    return table;
}

const Entry& entry(Identity id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw std::logic_error("unregistered identity");
}

// Row j of the triangular array: j^p + (j+1)^p + ... + n^p, for j = 1..n.
std::vector<BigInt> truncated_rows(unsigned p, long n) {
    std::vector<BigInt> rows(static_cast<std::size_t>(n) + 2, BigInt(0));
    for (long j = n; j >= 1; --j)
        rows[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j) + 1] + ipow(j, p);
    return rows;
}

}  // namespace

BigInt sum_powers_range(unsigned p, long lo, long hi) {
    BigInt total = 0;
    for (long k = lo; k <= hi; ++k) total += ipow(k, p);
    return total;
}

BigInt sum_powers_bruteforce(unsigned p, long n) { return sum_powers_range(p, 1, n); }

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) here
    }
    return r;
}

Rat bernoulli(unsigned m) {
    static std::mutex mu;
    static std::vector<Rat> table{Rat(1)};
    std::lock_guard lock(mu);
    while (table.size() <= m) {
        const auto k = static_cast<unsigned>(table.size());
        Rat acc(static_cast<long>(k) + 1);
        for (unsigned i = 0; i < k; ++i) acc -= Rat(binomial(k + 1, i)) * table[i];
        table.push_back(acc / Rat(binomial(k + 1, k)));
    }
    return table[m];
}

Rat faulhaber(unsigned p, long n) {
    Rat total;
    for (unsigned j = 0; j <= p; ++j)
        total += Rat(binomial(p + 1, j)) * bernoulli(j) * Rat(ipow(n, p + 1 - j));
    return total / Rat(static_cast<long>(p) + 1);
}

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> ids = [] {
        std::vector<Identity> v;
        for (const auto& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string_view identity_name(Identity id) { return entry(id).name; }

std::optional<Identity> identity_from_name(std::string_view name) {
    for (const auto& e : registry())
        if (e.name == name) return e.id;
    return std::nullopt;
}

const std::vector<std::string>& identity_parameters(Identity id) { return entry(id).params; }

BigInt excess_layer_count(long n) {
    BigInt total = 0;
    for (long k = 1; k <= n; ++k) total += BigInt(2 * k - 1) * BigInt(k) * BigInt(k);
    return total;
}

QuadExt final_assembly_rhs(long n) {
    const QuadExt& x = exact::strip_root();
    const QuadExt nn(n);
    const QuadExt half(Rat(1, 2));
    return (nn + half) * (nn * (nn + 1)) * ((nn - x) * (nn + 1 + x));
}

std::string IdentityReport::to_string() const {
    std::ostringstream os;
    os << identity_name(identity) << '(';
    bool first = true;
    for (const auto& name : identity_parameters(identity)) {
        auto it = parameters.find(name);
        if (it == parameters.end()) continue;
        if (!first) os << ", ";
        os << name << '=' << it->second;
        first = false;
    }
    os << "): " << lhs << " = " << rhs << (holds ? " holds" : " FAILS");
    return os.str();
}

IdentityReport evaluate_identity(Identity id, const Params& params) {
    const Entry& e = entry(id);
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw MissingParameter(std::string(e.name) + " requires --" + key);
        return it->second;
    };
    IdentityReport report{id, {}, {}, {}, false};
    for (const auto& key : e.params) report.parameters[key] = get(key);

    const long n = report.parameters.at("n");
    if (n < 0) throw ConstraintViolated(std::string(e.name) + ": n must be >= 0");
    long p = 0;
    long m = 0;
    if (report.parameters.count("p") != 0) {
        p = report.parameters.at("p");
        if (p < 0) throw ConstraintViolated(std::string(e.name) + ": p must be >= 0");
    }
    if (report.parameters.count("m") != 0) {
        m = report.parameters.at("m");
        if (m < 1 || m > n)
            throw ConstraintViolated(std::string(e.name) + ": requires 1 <= m <= n");
    }
    const auto up = static_cast<unsigned>(p);
    const BigInt N(n);
    const QuadExt& x = exact::strip_root();

    switch (id) {
    case Identity::OddSumSquare: {
        BigInt odd = 0;
        for (long k = 1; k <= n; ++k) odd += 2 * k - 1;
        report.lhs = Rat(odd);
        report.rhs = Rat(BigInt(N * N));
        break;
    }
    case Identity::Triangular:
        report.lhs = Rat(triangular_literal(n));
        report.rhs = Rat(BigInt(N * (N + 1)), BigInt(2));
        break;
    case Identity::SumSquares:
        report.lhs = Rat(sum_powers_bruteforce(2, n));
        report.rhs = Rat(BigInt(N * (N + 1) * (2 * N + 1)), BigInt(6));
        break;
    case Identity::Archimedes:
        report.lhs = Rat(BigInt(triangular_literal(n) + (N + 1) * N * N));
        report.rhs = Rat(BigInt(3 * sum_powers_bruteforce(2, n)));
        break;
    case Identity::Nicomachus: {
        const BigInt t = triangular_literal(n);
        report.lhs = Rat(sum_powers_bruteforce(3, n));
        report.rhs = Rat(BigInt(t * t));
        break;
    }
    case Identity::SquaresHalf:
        report.lhs = Rat(sum_powers_bruteforce(2, n));
        report.rhs = Rat(N) * Rat(BigInt(N + 1)) * (Rat(N) + Rat(1, 2)) / Rat(3);
        break;
    case Identity::CubesClosed:
        report.lhs = Rat(sum_powers_bruteforce(3, n));
        report.rhs = Rat(BigInt(N * N * (N + 1) * (N + 1)), BigInt(4));
        break;
    case Identity::FourthFactored:
        report.lhs = Rat(sum_powers_bruteforce(4, n));
        report.rhs = Rat(N) * Rat(BigInt(N + 1)) * (Rat(N) + Rat(1, 2))
                   * (Rat(BigInt(N * N + N)) - Rat(1, 3)) / Rat(5);
        break;
    case Identity::FourthIntegerForm:
        report.lhs = Rat(sum_powers_bruteforce(4, n));
        report.rhs = Rat(BigInt(N * (N + 1) * (2 * N + 1) * (3 * N * N + 3 * N - 1)), BigInt(30));
        break;
    case Identity::RowsCols: {
        const auto rows = truncated_rows(up, n);
        BigInt rhs = 0;
        for (long j = 1; j <= n; ++j) rhs += rows[static_cast<std::size_t>(j)];
        report.lhs = Rat(sum_powers_bruteforce(up + 1, n));
        report.rhs = Rat(rhs);
        break;
    }
    case Identity::Truncated: {
        // Rows 1..m-1 of the triangular array, cut at m, all equal row m.
        const auto rows = truncated_rows(up, n);
        BigInt rhs = BigInt(m - 1) * rows[static_cast<std::size_t>(m)];
        for (long j = m; j <= n; ++j) rhs += rows[static_cast<std::size_t>(j)];
        report.lhs = Rat(sum_powers_range(up + 1, m, n));
        report.rhs = Rat(rhs);
        break;
    }
    case Identity::AlmostSquare: {
        const BigInt M(m);
        report.lhs = Rat(BigInt(2 * sum_powers_range(1, m, n) + M * M));
        report.rhs = Rat(BigInt((N + 1) * (N + 1) - (N + 1 - M)));
        break;
    }
    case Identity::FourthAsSqTimesSq: {
        BigInt rhs = 0;
        for (long k = 1; k <= n; ++k) rhs += ipow(k, 2) * ipow(k, 2);
        report.lhs = Rat(sum_powers_bruteforce(4, n));
        report.rhs = Rat(rhs);
        break;
    }
    case Identity::ArchimedesGen:
        report.lhs = Rat(BigInt(5 * sum_powers_bruteforce(4, n)));
        report.rhs = Rat(BigInt(N * N * N * (N + 1) * (N + 1) + excess_layer_count(n)));
        break;
    case Identity::Step2Split: {
        const BigInt side = N * (N + 1);
        report.lhs = Rat(BigInt(N * N * (N + 1) * (N + 1)));
        report.rhs = Rat(BigInt(side * side));
        break;
    }
    case Identity::ScissorFactor: {
        const QuadExt nn(n);
        report.lhs = (nn - x) * (nn + 1 + x);
        report.rhs = Rat(BigInt(N * N + N)) - Rat(1, 3);
        break;
    }
    case Identity::TopLayerDouble:
        report.lhs = Rat(BigInt(2 * excess_layer_count(n)));
        report.rhs = Rat(BigInt(N * N * (N + 1) * (N + 1) - 2 * sum_powers_bruteforce(2, n)));
        break;
    case Identity::RBalance: {
        const QuadExt leftover = x + x * x;
        const QuadExt block(Rat(BigInt(N * N * (N + 1) * (N + 1))));
        const QuadExt rects(Rat(BigInt(N * (N + 1))));
        report.lhs = block - leftover * rects;
        report.rhs = QuadExt(2) * (leftover * QuadExt(Rat(BigInt(N * N * (N + 1))))
                                   + QuadExt(Rat(excess_layer_count(n))));
        break;
    }
    case Identity::FinalAssembly:
        report.lhs = Rat(BigInt(5 * sum_powers_bruteforce(4, n)));
        report.rhs = final_assembly_rhs(n);
        break;
    }
    report.holds = report.lhs == report.rhs;
    return report;
}

}  // namespace powersum::figurate
