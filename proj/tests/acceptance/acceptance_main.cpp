// Acceptance suite: one criterion per check, one PASS/FAIL line each.
// Exit code is the number of failed criteria.
//
// Criteria 3, 5, 6 and 9 exercise the bundled semigroup3 fixture exactly as
// published. That triple has a non-symmetric A, its C matrix is not
// symplectic, and its classes do not commute, so the affected sub-checks
// fail; the failures are reported with the computed truth rather than
// papered over. The one-bit corrected fixture semigroup3fix passes every
// corresponding check and is reported alongside.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cymub/cymub.hpp"

using namespace cymub;

namespace {

int g_failures = 0;

void run_criterion(int index, const std::string& title,
                   const std::function<void()>& fn) {
  try {
    fn();
    std::cout << "[PASS] criterion " << index << ": " << title << "\n";
  } catch (const std::exception& e) {
    ++g_failures;
    std::cout << "[FAIL] criterion " << index << ": " << title << "\n"
              << "       " << e.what() << "\n";
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

CyclicMubSet fixture_set(const std::string& name) {
  return build_classes(get_fixture(name).generator());
}

// --- shared reference data -------------------------------------------------

const Gf2Matrix kCGroup{{0, 1, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 0},
                        {1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0},
                        {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}};
const Gf2Matrix kCSemigroup{{0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1},
                            {1, 0, 1, 1, 0, 1}, {0, 0, 1, 1, 0, 0},
                            {0, 1, 1, 0, 1, 0}, {1, 1, 0, 0, 1, 1}};

const std::vector<std::string> kThreeQubitFixtures = {"field3", "group3",
                                                      "semigroup3", "offset3"};

Circuit random_circuit(int n, int len, std::mt19937_64& rng) {
  Circuit c{n, {}};
  for (int i = 0; i < len; ++i) {
    switch (rng() % 4) {
      case 0: c.gates.push_back(Gate::h(int(rng() % n))); break;
      case 1: c.gates.push_back(Gate::s(int(rng() % n))); break;
      default: {
        int a = int(rng() % n), b = int(rng() % (n - 1));
        if (b >= a) ++b;
        c.gates.push_back(rng() % 2 ? Gate::cz(a, b) : Gate::cnot(a, b));
      }
    }
  }
  return c;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// --- criteria ---------------------------------------------------------------

void criterion1_field3() {
  const auto& f = get_fixture("field3");
  require(validate_triple(*f.triple).valid(), "triple must validate");
  const Gf2Matrix c = build_C(*f.triple);
  const Gf2Matrix want = Gf2Matrix::from_blocks(
      f.triple->B, Gf2Matrix::identity(3), Gf2Matrix::identity(3),
      Gf2Matrix::zero(3, 3));
  require(c == want, "C must equal [[B, I], [I, 0]]");
  CyclicMubSet s = build_classes(f.generator());
  require(s.classes.size() == 9, "nine classes expected");
  std::set<std::uint64_t> all;
  for (const auto& cls : s.classes) {
    require(cls.elements.size() == 7, "each class holds 7 nonzero vectors");
    for (const auto& e : cls.elements) all.insert(e.bits);
  }
  require(all.size() == 63, "classes must partition all 63 nonzero vectors");
  require(validate_mub_partition(s).valid(), "partition checks must pass");
  const StructureVector v = structure_vector(s);
  require(v.counts == std::vector<int>({3, 0, 6}),
          "structure vector must be (3,0,6), got " + vec_str(v.counts));
}

void criterion2_group3() {
  const auto& f = get_fixture("group3");
  require(build_C(*f.triple) == kCGroup,
          "C must reproduce the reference 6x6 matrix bit-exactly");
  const StructureVector v = structure_vector(fixture_set("group3"));
  require(v.counts == std::vector<int>({2, 3, 4}),
          "structure vector must be (2,3,4), got " + vec_str(v.counts));
}

void criterion3_semigroup3() {
  const auto& f = get_fixture("semigroup3");
  require(build_C(*f.triple) == kCSemigroup,
          "C must reproduce the reference 6x6 matrix bit-exactly");
  require(classify_set_type(*f.triple) == SetType::Semigroup,
          "triple must classify as semigroup");
  // computed truth for the corrected triple, reported either way
  CyclicMubSet fixed = fixture_set("semigroup3fix");
  const StructureVector vfix = structure_vector(fixed);
  std::string fixnote;
  for (const MubClass& c : fixed.classes) {
    if (!(finest_partition(c).shape() == class_schmidt_partition(c).shape())) {
      fixnote = "; corrected fixture disagrees with the Schmidt oracle";
    }
  }
  std::cout << "       note: one-bit corrected triple semigroup3fix gives "
            << vfix.to_string() << ", matching the Schmidt oracle"
            << fixnote << "\n";
  // the published triple itself: structure vector must exist, agree with
  // the Schmidt oracle, and equal (1,6,2)
  CyclicMubSet s = build_classes(f.generator());
  const PartitionReport rep = validate_mub_partition(s);
  require(rep.valid(),
          "no structure vector exists: the published triple (A asymmetric) "
          "yields non-commuting classes and no complete MUB set; computed "
          "truth: the corrected triple gives " + vfix.to_string());
  const StructureVector v = structure_vector(s);
  require(v.counts == std::vector<int>({1, 6, 2}),
          "structure vector must be (1,6,2), got " + vec_str(v.counts));
}

void criterion4_offset3() {
  const auto& f = get_fixture("offset3");
  require(f.g0x == Gf2Matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
          "offset seed must be the reference x part");
  CyclicMubSet s = build_classes(f.generator());
  require(validate_mub_partition(s).valid(),
          "offset set must be a complete MUB family");
  const StructureVector v = structure_vector(s);
  require(v.counts == std::vector<int>({0, 9, 0}),
          "structure vector must be (0,9,0), got " + vec_str(v.counts));
}

void criterion5_unbiasedness() {
  std::string failures;
  for (const std::string& name : kThreeQubitFixtures) {
    try {
      const CyclicMubSet s = fixture_set(name);
      const MubUnitaries uw = mub_unitaries(s);
      const CheckReport rep = verify_unbiased(uw.u, uw.w, 8, 1e-9);
      if (!rep.passed) {
        failures += name + ": worst deviation " +
                    std::to_string(rep.worst_deviation) + "; ";
      } else {
        std::cout << "       " << name << ": worst | |entry|^2 - 1/8 | = "
                  << rep.worst_deviation << "\n";
      }
    } catch (const NotSymplecticError&) {
      failures += name + ": no unitary exists (C is not symplectic); ";
    }
  }
  {
    const CyclicMubSet s = fixture_set("semigroup3fix");
    const MubUnitaries uw = mub_unitaries(s);
    const CheckReport rep = verify_unbiased(uw.u, uw.w, 8, 1e-9);
    std::cout << "       semigroup3fix (corrected): worst deviation = "
              << rep.worst_deviation << (rep.passed ? " (pass)" : " (FAIL)")
              << "\n";
  }
  require(failures.empty(), failures);
}

void criterion6_cyclicity() {
  for (const std::string& name : kThreeQubitFixtures) {
    const CyclicGenerator g = name == "semigroup3"
                                  ? CyclicGenerator{3, build_C(*get_fixture(name).triple),
                                                    standard_seed(3),
                                                    CyclicGenerator::Source::FromTriple,
                                                    *get_fixture(name).triple}
                                  : get_fixture(name).generator();
    require(g.C.pow(9) == Gf2Matrix::identity(6), name + ": C^9 must equal I");
  }
  require(build_C(*get_fixture("field2").triple).pow(5) ==
              Gf2Matrix::identity(4),
          "field2: C^5 must equal I");
  std::string failures;
  for (const std::string& name : kThreeQubitFixtures) {
    try {
      const MubUnitaries uw = mub_unitaries(fixture_set(name));
      if (!verify_cyclic(uw.u, 8, 1e-9)) {
        failures += name + ": U^9 is not proportional to I; ";
      }
    } catch (const NotSymplecticError&) {
      failures += name + ": no unitary exists (C is not symplectic); ";
    }
  }
  require(failures.empty(), failures);
}

void criterion7_fibonacci() {
  const Gf2Poly p = Gf2Poly::from_coeffs({1, 1, 0, 1});
  require(fibonacci_index(p) == 9, "index of x^3 + x + 1 must be 9");
  int hits = 0;
  Gf2Poly winner;
  for (int bits = 0; bits < 8; ++bits) {
    Gf2Poly q = Gf2Poly::monomial(3);
    for (int i = 0; i < 3; ++i) {
      if ((bits >> i) & 1) q = q + Gf2Poly::monomial(i);
    }
    try {
      if (fibonacci_index(q) == 9) {
        ++hits;
        winner = q;
      }
    } catch (const std::exception&) {
    }
  }
  require(hits == 1 && winner == p,
          "exactly one monic degree-3 polynomial may have index 9");
}

void criterion8_closed_form() {
  for (const std::string& name :
       {std::string("field2"), std::string("field3"), std::string("group3"),
        std::string("semigroup3"), std::string("semigroup3fix")}) {
    const auto& t = *get_fixture(name).triple;
    const CyclicGenerator g{t.n, build_C(t), standard_seed(t.n),
                            CyclicGenerator::Source::FromTriple, t};
    const int d = 1 << t.n;
    for (int j = 0; j <= d + 1; ++j) {
      require(c_power_closed_form(t, j) == c_power(g, j),
              name + ": closed form differs from iterated product at j = " +
                  std::to_string(j));
    }
  }
}

void criterion9_synthesis_roundtrip() {
  std::string failures;
  for (const std::string& name : kThreeQubitFixtures) {
    try {
      const Gf2Matrix c = name == "semigroup3"
                              ? build_C(*get_fixture(name).triple)
                              : get_fixture(name).generator().C;
      const Circuit circ = synthesize(c);
      if (!(circuit_symplectic(circ) == c)) {
        failures += name + ": round trip mismatch; ";
      }
    } catch (const NotSymplecticError& e) {
      failures += name + ": " + e.what() + "; ";
    }
  }
  std::mt19937_64 rng(20260811);
  for (int n : {3, 4}) {
    for (int t = 0; t < 20; ++t) {
      const Gf2Matrix target =
          circuit_symplectic(random_circuit(n, 10 + int(rng() % 25), rng));
      if (!(circuit_symplectic(synthesize(target)) == target)) {
        failures += "random " + std::to_string(2 * n) + "x" +
                    std::to_string(2 * n) + " case " + std::to_string(t) +
                    ": round trip mismatch; ";
      }
    }
  }
  // conjugation correspondence, exhaustive over all 63 nonzero vectors
  for (const std::string& name : {std::string("field3"), std::string("group3"),
                                  std::string("offset3"),
                                  std::string("semigroup3fix")}) {
    const Gf2Matrix c = get_fixture(name).generator().C;
    const CMatrix u = circuit_unitary(synthesize(c));
    const CMatrix ud = u.adjoint();
    for (std::uint64_t bits = 1; bits < 64; ++bits) {
      const SymplecticVector a(3, bits);
      const CMatrix lhs = u * dense_matrix(zx_from_vector(a)) * ud;
      const CMatrix rhs = dense_matrix(
          zx_from_vector(SymplecticVector::from_vec(c * a.as_vec())));
      const double dev =
          std::min((lhs - rhs).max_abs(), (lhs + rhs).max_abs());
      if (dev > 1e-9) {
        failures += name + ": conjugation mismatch at a=" +
                    std::to_string(bits) + "; ";
      }
    }
  }
  require(failures.empty(), failures);
}

void criterion10_field_fast_path() {
  const Gf2Matrix bfield = get_fixture("field3").triple->B;
  const Circuit ref = synth_field_based(bfield);
  require(int(ref.gates.size()) == 7, "reference B must compile to 7 gates");
  require(int(ref.gates.size()) == 3 + nnz_upper(bfield),
          "count must be n + nnz_upper(B)");
  std::cout << "       field-based gate counts by qubit number:\n";
  for (int n = 2; n <= 6; ++n) {
    SearchQuery q{n, SetType::Field, 1, 1};
    const auto triples = find_triples(q);
    require(!triples.empty(),
            "search must find a field triple for n = " + std::to_string(n));
    const Gf2Matrix& b = triples.front().B;
    const Circuit c = synth_field_based(b);
    require(int(c.gates.size()) == n + nnz_upper(b),
            "gate count formula violated at n = " + std::to_string(n));
    const Gf2Matrix want = Gf2Matrix::from_blocks(
        b, Gf2Matrix::identity(n), Gf2Matrix::identity(n),
        Gf2Matrix::zero(n, n));
    require(circuit_symplectic(c) == want,
            "fast-path circuit action mismatch at n = " + std::to_string(n));
    std::cout << "         n=" << n << ": " << c.gates.size() << " gates ("
              << n << " H + " << nnz_upper(b) << " phase-type)\n";
  }
}

void criterion11_four_qubits() {
  for (SetType kind : {SetType::Field, SetType::Group, SetType::Semigroup}) {
    SearchQuery q{4, kind, 1, 1};
    const auto triples = find_triples(q);
    require(!triples.empty(),
            "search must find a " + set_type_name(kind) + " triple at n = 4");
    const GeneratorTriple& t = triples.front();
    require(validate_triple(t).valid(), set_type_name(kind) +
                                            ": triple must validate");
    require(classify_set_type(t) == kind,
            set_type_name(kind) + ": classification mismatch");
    CyclicMubSet s = build_classes(make_generator(t));
    require(s.classes.size() == 17, set_type_name(kind) +
                                        ": 17 classes expected");
    std::set<std::uint64_t> all;
    for (const auto& c : s.classes) {
      require(c.elements.size() == 15, "15 elements per class expected");
      for (const auto& e : c.elements) all.insert(e.bits);
    }
    require(all.size() == 255, set_type_name(kind) +
                                   ": classes must cover all 255 vectors");
    require(validate_mub_partition(s).valid(),
            set_type_name(kind) + ": partition checks must pass");
    const MubUnitaries uw = mub_unitaries(s);
    const CheckReport rep = verify_unbiased(uw.u, uw.w, 16, 1e-9);
    require(rep.passed, set_type_name(kind) + ": unbiasedness worst " +
                            std::to_string(rep.worst_deviation));
    const StructureVector v = structure_vector(s);
    int sum = 0;
    for (int c : v.counts) sum += c;
    require(sum == 17, set_type_name(kind) + ": structure counts must sum "
                                             "to 17");
    std::cout << "       n=4 " << set_type_name(kind) << ": structure "
              << v.to_string() << ", unbiasedness worst deviation "
              << rep.worst_deviation << "\n";
  }
}

void criterion12_oracle_agreement() {
  // every class of every complete fixture/search set at n <= 4
  std::vector<CyclicMubSet> sets;
  for (const char* name :
       {"field2", "field3", "group3", "semigroup3fix", "offset3"}) {
    sets.push_back(fixture_set(name));
  }
  std::cout << "       semigroup3 contributes no classes: not a complete set "
               "(see criterion 3)\n";
  for (SetType kind : {SetType::Field, SetType::Group, SetType::Semigroup}) {
    SearchQuery q{4, kind, 1, 1};
    sets.push_back(build_classes(make_generator(find_triples(q).front())));
  }
  for (const CyclicMubSet& s : sets) {
    for (const MubClass& c : s.classes) {
      const auto algebraic = finest_partition(c).shape();
      const auto numeric = class_schmidt_partition(c).shape();
      require(algebraic == numeric,
              "shape mismatch in class " + std::to_string(c.j));
    }
  }
}

}  // namespace

int main() {
  std::cout.setf(std::ios::scientific, std::ios::floatfield);
  std::cout.precision(3);

  run_criterion(1, "field-based n=3 fixture", criterion1_field3);
  run_criterion(2, "group-based n=3 reference matrix and structure",
                criterion2_group3);
  run_criterion(3, "semigroup n=3 reference matrix, class and structure",
                criterion3_semigroup3);
  run_criterion(4, "offset n=3 set with structure (0,9,0)",
                criterion4_offset3);
  run_criterion(5, "numeric unbiasedness below 1e-9 for the n=3 fixtures",
                criterion5_unbiasedness);
  run_criterion(6, "cyclic orders: C^9 = I, U^9 prop. I, C^5 = I at n=2",
                criterion6_cyclicity);
  run_criterion(7, "Fibonacci index machinery", criterion7_fibonacci);
  run_criterion(8, "closed-form powers equal iterated products",
                criterion8_closed_form);
  run_criterion(9, "synthesis round-trip and conjugation correspondence",
                criterion9_synthesis_roundtrip);
  run_criterion(10, "field-based fast path gate counts",
                criterion10_field_fast_path);
  run_criterion(11, "four-qubit property suite via search",
                criterion11_four_qubits);
  run_criterion(12, "entanglement oracle agreement at n <= 4",
                criterion12_oracle_agreement);

  std::cout << (g_failures == 0
                    ? "all criteria passed\n"
                    : std::to_string(g_failures) +
                          " criteria failed (see notes above; the semigroup3 "
                          "failures reproduce a defect in the published "
                          "reference data)\n");
  return g_failures;
}
