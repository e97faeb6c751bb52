#pragma once

#include "instance.hpp"

#include <cstdint>
#include <string>

namespace metator {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_invalid = 2, exit_cap = 3 };

struct RunResult {
  json report;
  int exit_code = exit_ok;
};

inline json factors_json(const FiniteAbelianPresentation& p) {
  return to_json_vector(p.factors);
}

inline json subgroup_json(const ResidueSubgroup& s) {
  return {{"generators", to_json_vectors(s.generators())}, {"order", to_json_int(s.order())}};
}

inline json cap_report(const cap_exceeded& e) {
  return {{"error", "cap_exceeded"},
          {"message", e.what()},
          {"required", to_json_int(e.required)},
          {"cap", to_json_int(e.cap)}};
}

namespace detail {

inline UnramifiedInstance unramified(const InstanceFile& f) {
  return UnramifiedInstance(f.lattice(), f.form(), f.q, f.n);
}

inline json unramified_invariants(const InstanceFile& f, const UnramifiedInstance& inst,
                                  const TorusModel& g) {
  const auto& t = inst.table();
  json r;
  r["instance"] = to_json(f);
  r["symbols"] = {{"N", to_json_int(t.modulus())},
                  {"m", t.m()},
                  {"r", to_json_int(t.r())},
                  {"h", to_json_int(t.h())},
                  {"p", t.p()}};
  const std::size_t rk = inst.rank();
  const Sublattice y = Sublattice::full(rk);
  r["quotients"] = {
      {"Ybar", to_json_vector(Vector(rk, t.modulus()))},
      {"residual_fixed", factors_json(g.residual_fixed().structure())},
      {"Y_mod_sharp", factors_json(quotient_structure(y, inst.sharp()))},
      {"Y_mod_gamma_sharp", factors_json(quotient_structure(y, inst.gamma_sharp()))}};
  r["lattices"] = {{"fixed", to_json_vectors(inst.fixed().basis_vectors())},
                   {"sharp", to_json_vectors(inst.sharp().basis_vectors())},
                   {"gamma_sharp", to_json_vectors(inst.gamma_sharp().basis_vectors())},
                   {"sharp_fixed", to_json_vectors(inst.sharp_fixed().basis_vectors())}};
  const auto sd = smith_elementary_divisors(inst.bilinear(), inst.n());
  r["smith"] = {{"d", to_json_vector(sd.d)}, {"e", to_json_vector(sd.e)}};
  const ResidueSubgroup center = center_lattice(g);
  json c = subgroup_json(center);
  c["index"] = to_json_int(g.group().order() / center.order());
  r["group_order"] = to_json_int(g.group().order());
  r["center"] = c;
  const PacketReport packet = packet_group(g);
  r["isogeny_image"] = subgroup_json(packet.isogeny_image);
  r["packet"] = {{"factors", factors_json(packet.packet)}, {"order", to_json_int(packet.packet.order())}};
  r["residual_fixed_exceeds_trace"] = packet.residual_fixed_exceeds_trace;
  std::optional<Sublattice> v;
  if (f.v_basis) v = Sublattice::from_vectors(rk, *f.v_basis);
  const auto ps = pseudospherical_report(g, v);
  json pj = {{"sharp_fixed_rank", ps.sharp_fixed_rank},
             {"fixed_rank", ps.fixed_rank},
             {"sharp_fixed_basis", to_json_vectors(ps.sharp_fixed.basis_vectors())},
             {"theta_generators", to_json_vectors(ps.theta_generators)}};
  if (ps.pseudo_trivial) pj["pseudo_trivial_factors"] = factors_json(*ps.pseudo_trivial);
  r["pseudospherical"] = pj;
  r["warnings"] = inst.lattice().warnings();
  return r;
}

inline json real_invariants(const InstanceFile& f, const RealInstance& inst) {
  json r;
  r["instance"] = to_json(f);
  const auto pc = component_group(inst);
  const auto packet = real_isogeny_image_and_packet(inst);
  r["fixed_rank"] = pc.fixed_rank();
  r["pi0"] = factors_json(packet.pi0);
  r["center_image"] = factors_json(packet.center_image);
  r["isogeny_image"] = factors_json(packet.isogeny_image);
  r["packet"] = {{"factors", factors_json(packet.packet)}, {"order", to_json_int(packet.packet.order())}};
  r["lattices"] = {{"fixed", to_json_vectors(inst.fixed().basis_vectors())},
                   {"sharp", to_json_vectors(inst.sharp().basis_vectors())},
                   {"gamma_sharp", to_json_vectors(inst.gamma_sharp().basis_vectors())},
                   {"norms", to_json_vectors(inst.norms().basis_vectors())}};
  r["warnings"] = inst.lattice().warnings();
  return r;
}

}  // namespace detail

/// Invariants only; no enumeration oracles run.
inline RunResult run_invariants(const InstanceFile& f) {
  RunResult out;
  if (f.kind == InstanceKind::unramified) {
    const UnramifiedInstance inst = detail::unramified(f);
    const TorusModel g(inst);
    out.report = detail::unramified_invariants(f, inst, g);
  } else {
    out.report = detail::real_invariants(f, RealInstance(f.lattice(), f.form()));
  }
  return out;
}

/// Invariants plus every oracle comparison. Throws cap_exceeded when an
/// enumeration would exceed its cap.
inline RunResult run_check(const InstanceFile& f) {
  RunResult out;
  json checks;
  bool passed = true;
  const auto flag = [&](json& obj, const char* key, bool value) {
    obj[key] = value;
    passed = passed && value;
  };
  if (f.kind == InstanceKind::unramified) {
    const UnramifiedInstance inst = detail::unramified(f);
    const TorusModel g(inst);
    const CenterReport cr = center_report(g, f.caps.center);
    out.report = detail::unramified_invariants(f, inst, g);

    json c;
    flag(c, "oracle_agrees", cr.oracle_agrees);
    flag(c, "representatives_agree", cr.representatives_agree);
    flag(c, "radical_count_matches", cr.radical_count_matches);
    flag(c, "pairing_descends", cr.pairing_descends);
    flag(c, "index_is_square", cr.index_is_square);
    c["enumerated"] = to_json_int(cr.enumerated);
    c["bruteforce_order"] = to_json_int(cr.bruteforce.order());
    if (cr.witness)
      c["witness"] = {{"element", to_json_vector(*cr.witness)},
                      {"in_bruteforce", cr.bruteforce.contains(*cr.witness)},
                      {"in_lattice", cr.lattice.contains(*cr.witness)}};
    checks["center"] = c;

    const PacketReport pr = packet_group(g);
    json es;
    flag(es, "isogeny_in_center", pr.isogeny_in_center);
    flag(es, "orders_multiply", pr.orders_multiply);
    checks["exact_sequence"] = es;

    const LatticeChainReport lc = lattice_chain_report(inst);
    json lj;
    flag(lj, "gamma_order", lc.gamma_order);
    flag(lj, "gamma_sharp_in_y", lc.gamma_sharp_in_y);
    flag(lj, "sharp_in_gamma_sharp", lc.sharp_in_gamma_sharp);
    flag(lj, "scaled_in_sharp", lc.scaled_in_sharp);
    flag(lj, "twisted_delta_image", lc.twisted_delta_image);
    flag(lj, "twisted_trace_image", lc.twisted_trace_image);
    flag(lj, "trace_delta_zero", lc.trace_delta_zero);
    flag(lj, "twisted_identity", lc.twisted_identity);
    flag(lj, "smith_prediction", lc.smith_prediction);
    checks["lattice_chain"] = lj;

    flag(checks, "mu_n_valued", commutators_in_mu_n(g));
    std::vector<Vector> shifts;
    for (std::size_t i = 0; i < inst.rank(); ++i) shifts.push_back(unit_vector(inst.rank(), i));
    flag(checks, "lift_independent", lift_independent(g, shifts));
    flag(checks, "trace_in_residual_fixed",
         g.residual_fixed().contains(
             image_in_quotient(Sublattice::full(inst.rank()).image(inst.twisted_trace()), inst.modulus())));

    if (inst.lattice().d() == 1) {
      const SplitReport sr = split_report(g);
      json sj;
      flag(sj, "center_is_isogeny_image", sr.center_is_isogeny_image);
      flag(sj, "smith_matches", sr.smith_matches);
      flag(sj, "trivial_packet", sr.trivial_packet);
      checks["split"] = sj;
    }

    json sv;
    const Int order = g.group().order();
    sv["ran"] = order <= f.caps.svn;
    if (order <= f.caps.svn) {
      const FiniteHeisenberg h = heisenberg_model(g);
      const SvnSummary s = svn_verify_all(h, f.caps.heisenberg);
      sv["dimension"] = s.dimension;
      sv["center_order"] = s.center_order;
      flag(sv, "claims", s.ok());
      flag(sv, "dimension_matches_index", Int(s.dimension) * s.dimension == cr.index);
      flag(sv, "center_order_matches", Int(s.center_order) == cr.lattice.order());
    }
    checks["svn"] = sv;
  } else {
    const RealInstance inst(f.lattice(), f.form());
    out.report = detail::real_invariants(f, inst);
    const RealCenterReport rc = real_center(inst, f.caps.real);
    json c;
    flag(c, "oracle_agrees", rc.agrees);
    flag(c, "kernel_in_radical", rc.kernel_in_radical);
    flag(c, "radical_codimension_even", rc.radical_codimension_even);
    c["enumerated"] = rc.enumerated;
    checks["center"] = c;
    const RealPacketReport pr = real_isogeny_image_and_packet(inst);
    json es;
    flag(es, "isogeny_in_center", pr.isogeny_in_center);
    flag(es, "orders_multiply", pr.orders_multiply);
    checks["exact_sequence"] = es;
    const Sublattice gs = inst.gamma_sharp();
    flag(checks, "lift_invariant",
         gs.contains(inst.norms()) && gs.contains(Sublattice::scaled_full(inst.rank(), 2)));
  }
  out.report["checks"] = checks;
  out.report["passed"] = passed;
  out.exit_code = passed ? exit_ok : exit_violation;
  return out;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace metator
