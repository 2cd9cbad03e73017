// Copyright 2026 The PQW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqw/stabilizer.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pqw/errors.h"

namespace pqw {

namespace {

std::size_t word_count(std::size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(word_count(num_qubits), 0), zs_(word_count(num_qubits), 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t log_i = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        log_i = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        log_i = (log_i + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.log_i_ = log_i;
    for (std::size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                result.set(q, true, false);
                break;
            case 'Y':
                result.set(q, true, true);
                break;
            case 'Z':
                result.set(q, false, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
        }
    }
    return result;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char pauli) {
    PauliString result(num_qubits);
    switch (pauli) {
        case 'X':
            result.set(qubit, true, false);
            break;
        case 'Y':
            result.set(qubit, true, true);
            break;
        case 'Z':
            result.set(qubit, false, true);
            break;
        default:
            throw std::invalid_argument("single() expects X, Y or Z");
    }
    return result;
}

void PauliString::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument("Pauli qubit index out of range");
    }
}

bool PauliString::x(std::size_t qubit) const {
    check_qubit(qubit);
    return (xs_[qubit >> 6] >> (qubit & 63)) & 1;
}

bool PauliString::z(std::size_t qubit) const {
    check_qubit(qubit);
    return (zs_[qubit >> 6] >> (qubit & 63)) & 1;
}

void PauliString::set(std::size_t qubit, bool x, bool z) {
    check_qubit(qubit);
    std::uint64_t bit = std::uint64_t{1} << (qubit & 63);
    xs_[qubit >> 6] = x ? (xs_[qubit >> 6] | bit) : (xs_[qubit >> 6] & ~bit);
    zs_[qubit >> 6] = z ? (zs_[qubit >> 6] | bit) : (zs_[qubit >> 6] & ~bit);
}

char PauliString::pauli_at(std::size_t qubit) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[(x(qubit) ? 1 : 0) | (z(qubit) ? 2 : 0)];
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("Pauli product " + str() + " has an imaginary scalar");
    }
    return log_i_ == 0 ? 1 : -1;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("multiplying Pauli strings of different sizes");
    }
    // Per qubit, sigma1 * sigma2 = i^g sigma3 with g = +1 for XY, YZ, ZX and -1 for
    // YX, ZY, XZ. Both cases are counted word-parallel.
    int total = log_i_ + rhs.log_i_;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
        std::uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        std::uint64_t minus = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        total += std::popcount(plus) - std::popcount(minus);
        xs_[w] = x1 ^ x2;
        zs_[w] = z1 ^ z2;
    }
    log_i_ = static_cast<std::uint8_t>(((total % 4) + 4) % 4);
    return *this;
}

PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("comparing Pauli strings of different sizes");
    }
    int parity = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
    }
    return parity == 0;
}

bool PauliString::same_paulis(const PauliString &other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliString::is_identity() const {
    return std::all_of(xs_.begin(), xs_.end(), [](std::uint64_t w) { return w == 0; }) &&
           std::all_of(zs_.begin(), zs_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        total += static_cast<std::size_t>(std::popcount(xs_[w] | zs_[w]));
    }
    return total;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[log_i_];
    for (std::size_t q = 0; q < num_qubits_; q++) {
        char c = pauli_at(q);
        out += c == 'I' ? '_' : c;
    }
    return out;
}

PauliString PauliString::restricted(std::span<const std::size_t> qubits) const {
    PauliString result(qubits.size());
    result.log_i_ = log_i_;
    for (std::size_t k = 0; k < qubits.size(); k++) {
        result.set(k, x(qubits[k]), z(qubits[k]));
    }
    return result;
}

void PauliString::conjugate_by(Gate gate, std::span<const std::size_t> targets) {
    if (targets.size() != static_cast<std::size_t>(gate_arity(gate))) {
        throw std::invalid_argument("wrong target count for " + std::string(gate_name(gate)));
    }
    for (std::size_t t : targets) {
        check_qubit(t);
    }
    bool flip = false;
    if (targets.size() == 1) {
        std::size_t q = targets[0];
        bool xq = x(q), zq = z(q);
        switch (gate) {
            case Gate::H:
                flip = xq && zq;
                set(q, zq, xq);
                break;
            case Gate::X:
                flip = zq;
                break;
            case Gate::Y:
                flip = xq != zq;
                break;
            case Gate::Z:
                flip = xq;
                break;
            case Gate::S:
                flip = xq && zq;
                set(q, xq, zq != xq);
                break;
            default:
                break;
        }
    } else {
        std::size_t a = targets[0], b = targets[1];
        if (a == b) {
            throw std::invalid_argument(std::string(gate_name(gate)) + " targets must be distinct");
        }
        bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
        if (gate == Gate::CZ) {
            flip = xa && xb && (za != zb);
            set(a, xa, za != xb);
            set(b, xb, zb != xa);
        } else {
            // CNOT with control a, target b.
            flip = xa && zb && (xb == za);
            set(a, xa, za != zb);
            set(b, xb != xa, zb);
        }
    }
    if (flip) {
        negate();
    }
}

PauliString conjugate(PauliString pauli, Gate gate, std::span<const std::size_t> targets) {
    pauli.conjugate_by(gate, targets);
    return pauli;
}

namespace {

// Column c < n is the X bit of qubit c; column n + q is the Z bit of qubit q.
bool column_bit(const PauliString &p, std::size_t column) {
    std::size_t n = p.num_qubits();
    return column < n ? p.x(column) : p.z(column - n);
}

struct Echelon {
    std::vector<PauliString> rows;
    // (column, row) in the order pivots were found.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

// Fully reduced row echelon form, visiting columns in `order`. Rows are combined by
// Pauli multiplication, so for commuting Hermitian rows the signs stay exact.
Echelon reduced_echelon(std::vector<PauliString> rows, const std::vector<std::size_t> &order) {
    Echelon e;
    std::size_t next = 0;
    for (std::size_t column : order) {
        std::size_t found = next;
        while (found < rows.size() && !column_bit(rows[found], column)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != next && column_bit(rows[r], column)) {
                rows[r] *= rows[next];
            }
        }
        e.pivots.emplace_back(column, next);
        next++;
    }
    e.rows = std::move(rows);
    return e;
}

std::vector<std::size_t> natural_order(std::size_t num_qubits) {
    std::vector<std::size_t> order(2 * num_qubits);
    for (std::size_t c = 0; c < order.size(); c++) {
        order[c] = c;
    }
    return order;
}

}  // namespace

std::size_t gf2_rank(const std::vector<PauliString> &rows) {
    if (rows.empty()) {
        return 0;
    }
    return reduced_echelon(rows, natural_order(rows[0].num_qubits())).pivots.size();
}

Tableau::Tableau(std::size_t num_qubits) : num_qubits_(num_qubits) {
    for (std::size_t q = 0; q < num_qubits; q++) {
        generators_.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
}

Tableau Tableau::plus_state(std::size_t num_qubits) {
    Tableau t(num_qubits);
    for (std::size_t q = 0; q < num_qubits; q++) {
        t.generators_[q] = PauliString::single(num_qubits, q, 'X');
    }
    return t;
}

Tableau Tableau::from_generators(std::vector<PauliString> generators) {
    std::size_t n = generators.size();
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("a tableau needs one generator per qubit");
        }
        if (!g.is_hermitian()) {
            throw std::invalid_argument("generator " + g.str() + " is not Hermitian");
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (!generators[i].commutes_with(generators[j])) {
                throw std::invalid_argument(
                    "generators " + generators[i].str() + " and " + generators[j].str() + " anticommute");
            }
        }
    }
    if (gf2_rank(generators) != n) {
        throw std::invalid_argument("generators are not independent");
    }
    Tableau t(0);
    t.num_qubits_ = n;
    t.generators_ = std::move(generators);
    return t;
}

void Tableau::apply(Gate gate, std::span<const std::size_t> targets) {
    for (auto &g : generators_) {
        g.conjugate_by(gate, targets);
    }
}

void Tableau::apply(Gate gate, std::size_t qubit) {
    std::size_t t[1] = {qubit};
    apply(gate, t);
}

void Tableau::apply(Gate gate, std::size_t a, std::size_t b) {
    std::size_t t[2] = {a, b};
    apply(gate, t);
}

std::optional<bool> Tableau::deterministic_z(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument("measured qubit out of range");
    }
    for (const auto &g : generators_) {
        if (g.x(qubit)) {
            return std::nullopt;
        }
    }
    auto sign = extract_sign(PauliString::single(num_qubits_, qubit, 'Z'));
    if (!sign.has_value()) {
        throw std::logic_error("tableau is not a maximal stabiliser group");
    }
    return *sign < 0;
}

void Tableau::measure_z(std::size_t qubit, bool outcome) {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument("measured qubit out of range");
    }
    auto pivot = std::find_if(
        generators_.begin(), generators_.end(), [&](const PauliString &g) { return g.x(qubit); });
    if (pivot == generators_.end()) {
        bool fixed = *deterministic_z(qubit);
        if (fixed != outcome) {
            throw ZeroProbabilityError(
                "Z measurement of qubit " + std::to_string(qubit) + " cannot give " +
                std::to_string(static_cast<int>(outcome)));
        }
        return;
    }
    for (auto it = generators_.begin(); it != generators_.end(); ++it) {
        if (it != pivot && it->x(qubit)) {
            *it *= *pivot;
        }
    }
    *pivot = PauliString::single(num_qubits_, qubit, 'Z');
    if (outcome) {
        pivot->negate();
    }
}

std::optional<int> Tableau::extract_sign(const PauliString &target) const {
    if (target.num_qubits() != num_qubits_) {
        throw std::invalid_argument("target Pauli does not match the tableau size");
    }
    Echelon e = reduced_echelon(generators_, natural_order(num_qubits_));
    PauliString residual = target;
    for (auto [column, row] : e.pivots) {
        if (column_bit(residual, column)) {
            residual *= e.rows[row];
        }
    }
    if (!residual.is_identity() || !residual.is_hermitian()) {
        return std::nullopt;
    }
    // target * h = lambda I for a group element h, so lambda * target = h.
    return residual.sign();
}

Tableau Tableau::reduce_to(std::span<const std::size_t> kept) const {
    std::vector<bool> keep(num_qubits_, false);
    for (std::size_t q : kept) {
        if (q >= num_qubits_ || keep[q]) {
            throw std::invalid_argument("kept qubits must be distinct and in range");
        }
        keep[q] = true;
    }
    std::vector<std::size_t> order;
    std::size_t dropped_columns = 0;
    for (int pass = 0; pass < 2; pass++) {
        for (std::size_t q = 0; q < num_qubits_; q++) {
            if (keep[q] == (pass == 1)) {
                order.push_back(q);
                order.push_back(num_qubits_ + q);
            }
        }
        if (pass == 0) {
            dropped_columns = order.size();
        }
    }
    Echelon e = reduced_echelon(generators_, order);
    std::size_t dropped_pivots = 0;
    for (auto [column, row] : e.pivots) {
        (void)row;
        auto at = std::find(order.begin(), order.end(), column) - order.begin();
        if (static_cast<std::size_t>(at) < dropped_columns) {
            dropped_pivots++;
        }
    }
    if (dropped_pivots != num_qubits_ - kept.size()) {
        throw std::invalid_argument("dropped qubits are entangled with the kept ones");
    }
    // Echelon rows are ordered by pivot position, so the data-only rows come last.
    std::vector<PauliString> reduced;
    for (std::size_t r = dropped_pivots; r < e.rows.size(); r++) {
        reduced.push_back(e.rows[r].restricted(kept));
    }
    return Tableau::from_generators(std::move(reduced));
}

Tableau conjugate(Tableau tableau, Gate gate, std::span<const std::size_t> targets) {
    tableau.apply(gate, targets);
    return tableau;
}

Tableau measure_z(Tableau tableau, std::size_t qubit, bool forced_outcome) {
    tableau.measure_z(qubit, forced_outcome);
    return tableau;
}

StateVector apply_pauli(const StateVector &state, const PauliString &pauli) {
    if (pauli.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("Pauli and state sizes differ");
    }
    if (state.num_qubits() > 64) {
        throw std::invalid_argument("dense Pauli action supports at most 64 qubits");
    }
    std::uint64_t xmask = pauli.num_qubits() ? pauli.x_words()[0] : 0;
    std::uint64_t zmask = pauli.num_qubits() ? pauli.z_words()[0] : 0;
    // Hermitian Y = i X Z, so the operator is i^(log_i + #Y) X^x Z^z.
    int log_i = (pauli.log_i() + std::popcount(xmask & zmask)) & 3;
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex scalar = kPowers[log_i];
    std::vector<Complex> out(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); i++) {
        Complex a = scalar * state[i];
        if (std::popcount(static_cast<std::uint64_t>(i) & zmask) & 1) {
            a = -a;
        }
        out[i ^ static_cast<std::size_t>(xmask)] = a;
    }
    return StateVector::from_amplitudes(std::move(out));
}

bool check_stabilizes(const StateVector &state, const Tableau &tableau, double tolerance) {
    if (state.num_qubits() != tableau.num_qubits()) {
        throw std::invalid_argument("state and tableau sizes differ");
    }
    for (const auto &g : tableau.generators()) {
        StateVector image = apply_pauli(state, g);
        for (std::size_t i = 0; i < state.dimension(); i++) {
            if (std::abs(image[i] - state[i]) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pqw
