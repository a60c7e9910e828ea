#include "subchi/homology.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "subchi/errors.hpp"
#include "subchi/rational.hpp"

namespace subchi {

int SparseMatrix::at(int row, int col) const {
    const auto& c = columns.at(static_cast<std::size_t>(col));
    const auto it = std::lower_bound(c.begin(), c.end(), std::make_pair(row, INT32_MIN));
    return it != c.end() && it->first == row ? it->second : 0;
}

ChainComplexData boundary_matrices(const Complex& k, std::size_t cap) {
    ChainComplexData data;
    if (k.is_void())
        return data;
    data.simplices = k.simplices_by_dimension(cap);
    data.boundary.resize(data.simplices.size());
    std::map<Simplex, int> previous;
    for (std::size_t d = 0; d < data.simplices.size(); ++d) {
        const auto& group = data.simplices[d];
        SparseMatrix m;
        m.cols = static_cast<int>(group.size());
        m.rows = d == 0 ? 1 : static_cast<int>(data.simplices[d - 1].size());
        m.columns.resize(group.size());
        for (std::size_t j = 0; j < group.size(); ++j) {
            auto& col = m.columns[j];
            if (d == 0) {
                col.emplace_back(0, 1);
                continue;
            }
            const auto& s = group[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t t = 0; t < s.size(); ++t)
                    if (t != i)
                        face.push_back(s[t]);
                col.emplace_back(previous.at(face), i % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
        }
        data.boundary[d] = std::move(m);
        previous.clear();
        for (std::size_t j = 0; j < group.size(); ++j)
            previous.emplace(group[j], static_cast<int>(j));
    }
    return data;
}

namespace {

struct ModField {
    long long q;
    using Value = long long;
    Value from_int(int v) const { return ((v % q) + q) % q; }
    bool is_zero(const Value& v) const { return v == 0; }
    Value sub(const Value& a, const Value& b) const { return ((a - b) % q + q) % q; }
    Value mul(const Value& a, const Value& b) const { return (a * b) % q; }
    Value div(const Value& a, const Value& b) const { return mul(a, inverse(b)); }
    Value inverse(Value a) const {
        long long result = 1;
        long long e = q - 2;
        while (e > 0) {
            if (e & 1)
                result = result * a % q;
            a = a * a % q;
            e >>= 1;
        }
        return result;
    }
};

struct RationalField {
    using Value = Rational;
    Value from_int(int v) const { return Value(v); }
    bool is_zero(const Value& v) const { return v == 0; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const { return a / b; }
};

// Column reduction by lowest nonzero row; the number of surviving pivots is
// the rank.
template <typename Field>
std::size_t reduce(const SparseMatrix& m, const Field& field) {
    using Value = typename Field::Value;
    using Column = std::vector<std::pair<int, Value>>;
    std::unordered_map<int, Column> pivots;
    std::size_t rank = 0;
    for (const auto& raw : m.columns) {
        Column col;
        col.reserve(raw.size());
        for (const auto& [r, v] : raw)
            if (!field.is_zero(field.from_int(v)))
                col.emplace_back(r, field.from_int(v));
        while (!col.empty()) {
            const int low = col.back().first;
            const auto it = pivots.find(low);
            if (it == pivots.end()) {
                pivots.emplace(low, std::move(col));
                ++rank;
                break;
            }
            const Column& other = it->second;
            const Value factor = field.div(col.back().second, other.back().second);
            Column merged;
            merged.reserve(col.size() + other.size());
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < col.size() || b < other.size()) {
                if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                    merged.push_back(std::move(col[a++]));
                } else if (a == col.size() || other[b].first < col[a].first) {
                    merged.emplace_back(other[b].first, field.sub(field.from_int(0), field.mul(factor, other[b].second)));
                    ++b;
                } else {
                    Value v = field.sub(col[a].second, field.mul(factor, other[b].second));
                    if (!field.is_zero(v))
                        merged.emplace_back(col[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            col = std::move(merged);
        }
    }
    return rank;
}

}  // namespace

std::size_t matrix_rank(const SparseMatrix& m, std::optional<int> prime) {
    if (prime) {
        if (*prime < 2)
            throw InvalidArgument("coefficient field needs a prime modulus");
        return reduce(m, ModField{*prime});
    }
    return reduce(m, RationalField{});
}

bool boundary_squares_to_zero(const ChainComplexData& data) {
    for (std::size_t d = 1; d < data.boundary.size(); ++d) {
        const auto& outer = data.boundary[d - 1];
        const auto& inner = data.boundary[d];
        for (const auto& col : inner.columns) {
            std::map<int, long long> acc;
            for (const auto& [mid, v] : col)
                for (const auto& [row, w] : outer.columns[static_cast<std::size_t>(mid)])
                    acc[row] += static_cast<long long>(v) * w;
            for (const auto& [row, total] : acc)
                if (total != 0)
                    return false;
        }
    }
    return true;
}

namespace {

// Ranks of boundary[0..top+1], with zero past the top dimension.
std::vector<std::size_t> ranks(const ChainComplexData& data, std::optional<int> prime) {
    std::vector<std::size_t> r(data.boundary.size() + 1, 0);
    for (std::size_t d = 0; d < data.boundary.size(); ++d)
        r[d] = matrix_rank(data.boundary[d], prime);
    return r;
}

}  // namespace

std::vector<long long> reduced_betti(const ChainComplexData& data, int up_to, std::optional<int> prime) {
    std::vector<long long> out(static_cast<std::size_t>(std::max(up_to + 1, 0)), 0);
    const auto r = ranks(data, prime);
    for (std::size_t d = 0; d < out.size() && d < data.simplices.size(); ++d)
        out[d] = static_cast<long long>(data.simplices[d].size()) - static_cast<long long>(r[d]) -
                 static_cast<long long>(r[d + 1]);
    return out;
}

std::vector<long long> reduced_betti(const Complex& k, int up_to, std::optional<int> prime) {
    return reduced_betti(boundary_matrices(k), up_to, prime);
}

EulerReport euler_consistency(const Complex& k, std::optional<int> prime) {
    EulerReport report;
    if (k.is_void())
        return report;
    const auto data = boundary_matrices(k);
    const auto r = ranks(data, prime);
    // The empty simplex contributes f_{-1} = 1 and b~_{-1} = 1 - rank of the augmentation.
    report.from_faces = -1;
    report.from_betti = -(1 - static_cast<long long>(r[0]));
    for (std::size_t d = 0; d < data.simplices.size(); ++d) {
        const long long sign = d % 2 == 0 ? 1 : -1;
        const auto f = static_cast<long long>(data.simplices[d].size());
        report.from_faces += sign * f;
        report.from_betti += sign * (f - static_cast<long long>(r[d]) - static_cast<long long>(r[d + 1]));
    }
    return report;
}

ConnectivityReport check_connectivity_necessary(const Complex& k, int l, std::optional<int> prime) {
    ConnectivityReport report;
    if (l < 0)
        return report;
    report.betti = reduced_betti(k, l, prime);
    for (int d = 0; d <= l; ++d)
        if (report.betti[static_cast<std::size_t>(d)] != 0) {
            report.ok = false;
            report.failing_dimension = d;
            break;
        }
    return report;
}

std::string betti_csv(const std::vector<long long>& betti) {
    std::ostringstream os;
    os << "dimension,reduced_betti\n";
    for (std::size_t d = 0; d < betti.size(); ++d)
        os << d << ',' << betti[d] << '\n';
    return os.str();
}

std::string matrix_coordinates(const SparseMatrix& m) {
    std::ostringstream os;
    os << "# " << m.rows << " x " << m.cols << '\n';
    for (std::size_t c = 0; c < m.columns.size(); ++c)
        for (const auto& [r, v] : m.columns[c])
            os << r << ' ' << c << ' ' << v << '\n';
    return os.str();
}

}  // namespace subchi
