// qcore.hpp
// Exact complex linear algebra for small multi-qubit pure states (1..4 qubits):
// construction, tensor products, single-qubit operators, partial projections.
//
// Index convention is big-endian throughout: for an n-qubit state, qubit 0 is
// the most significant bit of the amplitude index. The 4-qubit composite used
// by the protocol indexes as 8*i_info + 4*i_A + 2*i_B + 1*i_C.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace tpt {

using Complex = std::complex<double>;

struct StateVector {
    int n_qubits = 0;
    std::vector<Complex> amps;
    // true iff |sum |amp|^2 - 1| < 1e-12 at construction time
    bool normalized = false;

    int dim() const { return static_cast<int>(amps.size()); }
};

// Value of qubit q in amplitude index i (big-endian).
inline int qubit_bit(int index, int qubit, int n_qubits) {
    return (index >> (n_qubits - 1 - qubit)) & 1;
}

// Builds a state from explicit amplitudes. Throws std::invalid_argument on a
// length mismatch, n outside 1..4, or any non-finite amplitude.
StateVector make_state(int n_qubits, std::vector<Complex> amps);

// |index> on n qubits.
StateVector basis_state(int n_qubits, int index);

Complex inner(const StateVector& a, const StateVector& b);  // conjugate-linear in a
double norm2(const StateVector& s);

// a (x) b, big-endian: amps[i * 2^nb + j] = a[i] * b[j].
StateVector tensor(const StateVector& a, const StateVector& b);

struct OneQubitOperator {
    std::array<Complex, 4> m{};  // row-major 2x2

    Complex operator()(int row, int col) const { return m[2 * row + col]; }
};

namespace pauli_ops {
inline const OneQubitOperator identity{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}};
inline const OneQubitOperator sigma_x{{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};
inline const OneQubitOperator sigma_y{{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}}};
inline const OneQubitOperator sigma_z{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}}};
}  // namespace pauli_ops

// Pauli labels, the alphabet of correction tables. Encoded 0..3 for the
// base-4 table codes used by the exhaustive search.
enum class Pauli : int { identity = 0, x = 1, y = 2, z = 3 };

const OneQubitOperator& pauli_operator(Pauli p);
char pauli_char(Pauli p);

// Applies op to one tensor factor. Throws std::out_of_range on a bad index.
StateVector apply_single(const OneQubitOperator& op, int target, const StateVector& s);

// Contracts <bra| (2 qubits) against factors (q1, q2) of s, in that order.
// Returns the UNNORMALIZED residual on the remaining qubits (original order);
// its squared norm is the branch probability. s must have at least 3 qubits.
StateVector project_pair(const StateVector& bra, int q1, int q2, const StateVector& s);

// Same contraction for a single factor; s must have at least 2 qubits.
StateVector project_single(const StateVector& bra, int target, const StateVector& s);

}  // namespace tpt
