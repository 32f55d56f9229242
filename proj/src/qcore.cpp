#include "tpt/qcore.hpp"

#include <cmath>
#include <stdexcept>

namespace tpt {

namespace {

constexpr double kNormTol = 1e-12;

bool norm_flag(const std::vector<Complex>& amps) {
    double n2 = 0.0;
    for (const Complex& a : amps) n2 += std::norm(a);
    return std::abs(n2 - 1.0) < kNormTol;
}

StateVector wrap(int n_qubits, std::vector<Complex> amps) {
    bool flag = norm_flag(amps);
    return StateVector{n_qubits, std::move(amps), flag};
}

}  // namespace

StateVector make_state(int n_qubits, std::vector<Complex> amps) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw std::invalid_argument("make_state: n_qubits must be in 1..4");
    }
    if (amps.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("make_state: amplitude count must be 2^n_qubits");
    }
    for (const Complex& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("make_state: non-finite amplitude");
        }
    }
    return wrap(n_qubits, std::move(amps));
}

StateVector basis_state(int n_qubits, int index) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw std::invalid_argument("basis_state: n_qubits must be in 1..4");
    }
    if (index < 0 || index >= (1 << n_qubits)) {
        throw std::out_of_range("basis_state: index out of range");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[static_cast<std::size_t>(index)] = Complex{1, 0};
    return StateVector{n_qubits, std::move(amps), true};
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex acc{0, 0};
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        acc += std::conj(a.amps[i]) * b.amps[i];
    }
    return acc;
}

double norm2(const StateVector& s) {
    double acc = 0.0;
    for (const Complex& a : s.amps) acc += std::norm(a);
    return acc;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    int n = a.n_qubits + b.n_qubits;
    if (n > 4) {
        throw std::invalid_argument("tensor: combined state exceeds 4 qubits");
    }
    std::vector<Complex> out(std::size_t{1} << n);
    const std::size_t db = b.amps.size();
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            out[i * db + j] = a.amps[i] * b.amps[j];
        }
    }
    return wrap(n, std::move(out));
}

const OneQubitOperator& pauli_operator(Pauli p) {
    switch (p) {
        case Pauli::identity: return pauli_ops::identity;
        case Pauli::x: return pauli_ops::sigma_x;
        case Pauli::y: return pauli_ops::sigma_y;
        case Pauli::z: return pauli_ops::sigma_z;
    }
    throw std::invalid_argument("pauli_operator: bad label");
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::identity: return 'I';
        case Pauli::x: return 'X';
        case Pauli::y: return 'Y';
        case Pauli::z: return 'Z';
    }
    return '?';
}

StateVector apply_single(const OneQubitOperator& op, int target, const StateVector& s) {
    if (target < 0 || target >= s.n_qubits) {
        throw std::out_of_range("apply_single: target qubit out of range");
    }
    const int n = s.n_qubits;
    const int hi = 1 << (n - 1 - target);
    std::vector<Complex> out(s.amps.size());
    for (int i = 0; i < s.dim(); ++i) {
        const int b = (i & hi) ? 1 : 0;
        const int i0 = i & ~hi;
        const int i1 = i0 | hi;
        out[static_cast<std::size_t>(i)] =
            op(b, 0) * s.amps[static_cast<std::size_t>(i0)] +
            op(b, 1) * s.amps[static_cast<std::size_t>(i1)];
    }
    return wrap(n, std::move(out));
}

StateVector project_pair(const StateVector& bra, int q1, int q2, const StateVector& s) {
    if (bra.n_qubits != 2) {
        throw std::invalid_argument("project_pair: bra must be a 2-qubit state");
    }
    if (s.n_qubits < 3) {
        throw std::invalid_argument("project_pair: state must have at least 3 qubits");
    }
    if (q1 < 0 || q1 >= s.n_qubits || q2 < 0 || q2 >= s.n_qubits) {
        throw std::out_of_range("project_pair: qubit index out of range");
    }
    if (q1 == q2) {
        throw std::out_of_range("project_pair: qubit indices collide");
    }
    const int n = s.n_qubits;
    const int m = n - 2;
    std::vector<Complex> out(std::size_t{1} << m);
    for (int i = 0; i < s.dim(); ++i) {
        const int v = 2 * qubit_bit(i, q1, n) + qubit_bit(i, q2, n);
        int r = 0;
        int pos = 0;
        for (int q = 0; q < n; ++q) {
            if (q == q1 || q == q2) continue;
            r |= qubit_bit(i, q, n) << (m - 1 - pos);
            ++pos;
        }
        out[static_cast<std::size_t>(r)] +=
            std::conj(bra.amps[static_cast<std::size_t>(v)]) * s.amps[static_cast<std::size_t>(i)];
    }
    return wrap(m, std::move(out));
}

StateVector project_single(const StateVector& bra, int target, const StateVector& s) {
    if (bra.n_qubits != 1) {
        throw std::invalid_argument("project_single: bra must be a 1-qubit state");
    }
    if (s.n_qubits < 2) {
        throw std::invalid_argument("project_single: state must have at least 2 qubits");
    }
    if (target < 0 || target >= s.n_qubits) {
        throw std::out_of_range("project_single: target qubit out of range");
    }
    const int n = s.n_qubits;
    const int m = n - 1;
    std::vector<Complex> out(std::size_t{1} << m);
    for (int i = 0; i < s.dim(); ++i) {
        const int v = qubit_bit(i, target, n);
        int r = 0;
        int pos = 0;
        for (int q = 0; q < n; ++q) {
            if (q == target) continue;
            r |= qubit_bit(i, q, n) << (m - 1 - pos);
            ++pos;
        }
        out[static_cast<std::size_t>(r)] +=
            std::conj(bra.amps[static_cast<std::size_t>(v)]) * s.amps[static_cast<std::size_t>(i)];
    }
    return wrap(m, std::move(out));
}

}  // namespace tpt
