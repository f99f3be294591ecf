#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsha::qsim {

enum class GateKind : std::uint8_t { X, Cnot };

struct GateOp {
    GateKind kind;
    std::uint32_t target;
    std::uint32_t control; // Cnot only
    bool operator==(const GateOp&) const = default;
};

// Independent post-gate bit flips on the two qubits touched by each CNOT.
struct NoiseModel {
    double cnot_flip_prob = 0.0;
};

// X/CNOT circuit with terminal measurement. Appending a gate after a
// measurement has been declared is rejected: measurement ends the circuit.
class Circuit {
public:
    explicit Circuit(std::uint32_t num_qubits);

    std::uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    // Ascending, duplicate-free.
    const std::vector<std::uint32_t>& measured_qubits() const { return measured_; }

    Circuit& x(std::uint32_t target);
    Circuit& cnot(std::uint32_t control, std::uint32_t target);

    // One X gate per '1' character; the string's leftmost (most significant)
    // bit lands on the highest qubit of the window [offset, offset+len).
    Circuit& encode_bits(std::string_view bits, std::uint32_t offset);

    Circuit& measure(std::span<const std::uint32_t> qubits);
    Circuit& measure_all();

    bool operator==(const Circuit&) const = default;

private:
    void check_gate_append(std::uint32_t qubit) const;

    std::uint32_t num_qubits_;
    std::vector<GateOp> gates_;
    std::vector<std::uint32_t> measured_;
};

// Outcome bitstrings render the highest measured qubit leftmost.
struct ShotHistogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
};

// Amplitude of basis state |i> at index i; qubit q is bit q of i.
using StateVector = std::vector<std::complex<double>>;

inline constexpr std::uint32_t kDefaultDenseQubitCap = 24;

double norm_squared(const StateVector& amplitudes);

// Full 2^n-amplitude simulation. Gate kernels run under OpenMP; the serial
// twin lives in qsha::reference.
StateVector simulate_dense(const Circuit& circuit,
                           std::uint32_t dense_qubit_cap = kDefaultDenseQubitCap);

// Classical bit tracking for noise-free X/CNOT circuits; handles widths far
// beyond the dense cap. Returns the full register, qubit n-1 leftmost.
std::string simulate_basis(const Circuit& circuit);

// Building blocks for basis tracking: flip bits in place over packed words.
void apply_gates_basis(std::span<const GateOp> gates, std::span<std::uint64_t> bits);
// Single-word fast path for circuits of at most 64 qubits.
std::uint64_t apply_gates_basis_word(std::span<const GateOp> gates, std::uint64_t bits);

// Multi-shot execution. Every shot draws from an independent stream derived
// from (seed, shot index), so the histogram does not depend on how shots are
// scheduled across threads. Noise-free X/CNOT circuits collapse to a single
// outcome bin.
ShotHistogram run(const Circuit& circuit, std::uint64_t shots,
                  const std::optional<NoiseModel>& noise, std::uint64_t seed);

// Dense route for the same job: simulate amplitudes, then sample each shot
// from the squared magnitudes. Cross-checks run() and serves --dense runs.
ShotHistogram sample_dense(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                           std::uint32_t dense_qubit_cap = kDefaultDenseQubitCap);

// Projects a full-register basis index onto the measured qubits, highest
// measured qubit leftmost.
std::string render_measured(const Circuit& circuit, std::uint64_t basis_bits);
std::string render_measured(const Circuit& circuit, std::span<const std::uint64_t> basis_words);

} // namespace qsha::qsim
