#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "quatlie/serialization.hpp"

using namespace quatlie;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text << "\n";
  }
}

int parse_algebra_id(const std::string& spec) {
  try {
    std::size_t used = 0;
    int id = std::stoi(spec, &used);
    if (used == spec.size() && id >= 1 && id <= 16) return id;
  } catch (const std::exception&) {
  }
  int id = catalog_id_from_name(spec);
  if (id == 0) throw CLI::ValidationError("--algebra", "unknown algebra '" + spec + "'");
  return id;
}

std::vector<int> parse_algebra_list(const std::string& spec, int max_id) {
  if (spec == "all") {
    std::vector<int> ids;
    for (int id = 1; id <= max_id; ++id) ids.push_back(id);
    return ids;
  }
  return {parse_algebra_id(spec)};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QUATLIE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed QUATLIE_SEED\n";
    }
  }
  return 42;
}

struct CommonOpts {
  int p = 0;
  int q = 0;
  std::string format = "table";
  std::string out;
};

int cmd_dims(const CommonOpts& opt) {
  Signature sig(opt.p, opt.q);
  auto quat = quat_type_dims(sig.n());
  if (opt.format == "json") {
    json algebras = json::array();
    for (int id = 1; id <= 16; ++id)
      algebras.push_back({{"id", id},
                          {"name", catalog_row(id).name},
                          {"dim", lie_algebra_dim(id, sig.n())}});
    json j = {{"p", sig.p()},
              {"q", sig.q()},
              {"quat_dims", {quat[0], quat[1], quat[2], quat[3]}},
              {"algebras", algebras}};
    emit(j.dump(2), opt.out);
    return 0;
  }
  std::string text = "Cl(" + std::to_string(sig.p()) + "," + std::to_string(sig.q()) +
                     "), n = " + std::to_string(sig.n()) + "\n";
  text += "quaternion types: ";
  for (int s = 0; s < 4; ++s)
    text += std::to_string(s) + ":" + std::to_string(quat[s]) + (s < 3 ? "  " : "\n");
  text += "\n id  algebra     group           dim\n";
  for (int id = 1; id <= 16; ++id) {
    const auto& row = catalog_row(id);
    char buf[96];
    std::snprintf(buf, sizeof buf, " %2d  %-10s  %-14s %5lld\n", id, row.name,
                  row.group_name, static_cast<long long>(lie_algebra_dim(id, sig.n())));
    text += buf;
  }
  emit(text, opt.out);
  return 0;
}

int cmd_repr(const CommonOpts& opt, const std::string& normal_form) {
  Signature sig(opt.p, opt.q);
  Representation rep = build_beta(sig);
  RepresentationReport report = verify_representation(rep);
  AdditionalSignature as = additional_signature(rep);

  json j;
  if (normal_form == "none") {
    j = representation_to_json(rep, as);
  } else {
    NormalFormKind kind;
    const bool odd = sig.n() % 2 == 1;
    if (normal_form == "j-from-p")
      kind = odd ? NormalFormKind::BlockJFromP : NormalFormKind::JFromP;
    else if (normal_form == "j-from-q")
      kind = odd ? NormalFormKind::BlockJFromQ : NormalFormKind::JFromQ;
    else if (normal_form == "orth-j")
      kind = NormalFormKind::OrthJ;
    else if (normal_form == "orth-omega")
      kind = NormalFormKind::OrthOmega;
    else
      throw CLI::ValidationError("--normal-form", "unknown kind '" + normal_form + "'");
    j = normal_formed_to_json(normal_form_rep(rep, kind), as);
  }
  j["verification"] = {{"anticommutation", report.anticommutation},
                       {"hermiticity", report.hermiticity},
                       {"odd_block_structure", report.odd_block_structure},
                       {"faithful", report.faithful},
                       {"rank", report.rank}};
  if (opt.format == "json") {
    emit(j.dump(2), opt.out);
  } else {
    std::string text = "representation of Cl(" + std::to_string(sig.p()) + "," +
                       std::to_string(sig.q()) + "): kind " +
                       j["kind"].get<std::string>() + ", size " +
                       std::to_string(rep.matrix_size()) + "\n";
    text += "additional signature: k=" + std::to_string(as.k) +
            " l=" + std::to_string(as.l) + " (kp,lp,kq,lq)=(" + std::to_string(as.kp) +
            "," + std::to_string(as.lp) + "," + std::to_string(as.kq) + "," +
            std::to_string(as.lq) + ")\n";
    text += "verification: " + std::string(report.passed() ? "pass" : "FAIL") +
            " (rank " + std::to_string(report.rank) + ")\n";
    text += j["matrices"].dump();
    emit(text, opt.out);
  }
  return report.passed() ? 0 : 1;
}

int cmd_classify(const CommonOpts& opt, const std::string& algebra) {
  Signature sig(opt.p, opt.q);
  std::vector<int> ids = parse_algebra_list(algebra, 11);
  for (int id : ids)
    if (id > 11)
      throw CLI::ValidationError("--algebra", "rows 12..16 are outside the classification");

  json arr = json::array();
  std::string text;
  bool table = opt.format != "json";
  for (int id : ids) {
    ClassicalLieAlgebra d = classify(id, sig);
    arr.push_back(classification_to_json(id, sig, d));
    if (table) {
      char buf[160];
      std::snprintf(buf, sizeof buf, " %2d  %-10s  %-22s %-22s dim %-6lld [%s]\n", id,
                    catalog_row(id).name, algebra_display(d).c_str(),
                    group_display(group_classify(id, sig)).c_str(),
                    static_cast<long long>(real_dim(d)), d.branch.c_str());
      text += buf;
      if (id == 7 || id == 8 || id == 11) {
        for (const auto& step : derived_iso_chain(id, sig)) text += "      " + step + "\n";
      }
    }
  }
  if (table)
    emit(text, opt.out);
  else
    emit(ids.size() == 1 ? arr[0].dump(2) : arr.dump(2), opt.out);
  return 0;
}

int cmd_verify(const CommonOpts& opt, const std::string& algebra, const VerifyOptions& vopt) {
  Signature sig(opt.p, opt.q);
  std::vector<int> ids = parse_algebra_list(algebra, 16);

  std::vector<VerificationReport> reports;
  for (int id : ids) reports.push_back(verify_signature(id, sig, vopt));

  bool all_pass = true;
  for (const auto& r : reports) all_pass &= r.passed();

  if (opt.format == "json") {
    emit(verification_reports_to_json(reports).dump(2), opt.out);
  } else {
    std::string text;
    for (const auto& r : reports) {
      text += "algebra " + std::to_string(r.id) + " (" + catalog_row(r.id).name + "): " +
              (r.passed() ? "pass" : "FAIL") + "\n";
      for (const auto& c : r.checks) {
        char buf[192];
        std::snprintf(buf, sizeof buf, "   %-20s %-4s residual %.3e %s\n", c.name.c_str(),
                      c.passed ? "ok" : "FAIL", c.residual, c.witness.c_str());
        text += buf;
      }
    }
    emit(text, opt.out);
  }
  return all_pass ? 0 : 1;
}

int cmd_sweep(int max_n, const std::string& algebra, const std::string& format,
              const std::string& out, const VerifyOptions& vopt, int jobs) {
  std::vector<int> ids = parse_algebra_list(algebra, 16);

  struct Task {
    int id;
    int p;
    int q;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n)
    for (int p = n; p >= 0; --p)
      for (int id : ids) tasks.push_back({id, p, n - p});

  std::vector<VerificationReport> reports(tasks.size());
  jobs = std::max(1, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      reports[i] = verify_signature(tasks[i].id, Signature(tasks[i].p, tasks[i].q), vopt);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool all_pass = true;
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.passed()) {
      all_pass = false;
      ++failures;
    }
  }

  if (format == "json") {
    emit(verification_reports_to_json(reports).dump(2), out);
  } else {
    std::string text = "sweep up to n = " + std::to_string(max_n) + ": " +
                       std::to_string(tasks.size()) + " reports, " +
                       std::to_string(failures) + " failures\n";
    for (int id : ids) {
      char buf[16];
      std::snprintf(buf, sizeof buf, " %2d ", id);
      text += buf;
      for (const auto& r : reports) {
        if (r.id != id) continue;
        text += " (" + std::to_string(r.p) + "," + std::to_string(r.q) + ")" +
                (r.passed() ? "+" : "X");
      }
      text += "\n";
    }
    emit(text, out);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quatlie: quaternion-type Lie algebras in complexified Clifford algebras"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string algebra = "all";
  std::string normal_form = "none";
  std::string sweep_format = "table";
  std::string sweep_out;
  VerifyOptions vopt;
  vopt.seed = default_seed();
  int max_n = 6;
  int jobs = 1;

  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("--p", common.p, "positive generator count")->required();
    cmd->add_option("--q", common.q, "negative generator count")->required();
    cmd->add_option("--format", common.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", common.out, "write output to file");
  };

  CLI::App* dims = app.add_subcommand("dims", "quaternion-type and algebra dimensions");
  add_sig(dims);

  CLI::App* repr = app.add_subcommand("repr", "generator matrices and verification");
  add_sig(repr);
  repr->add_option("--normal-form", normal_form,
                   "none, j-from-p, j-from-q, orth-j, orth-omega");

  CLI::App* classify_cmd = app.add_subcommand("classify", "classical Lie algebra lookup");
  add_sig(classify_cmd);
  classify_cmd->add_option("--algebra", algebra, "row number 1..11, name, or 'all'");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verification checks for one signature");
  add_sig(verify_cmd);
  verify_cmd->add_option("--algebra", algebra, "row number 1..16, name, or 'all'");
  verify_cmd->add_option("--tol", vopt.tol_structural, "structural tolerance");
  verify_cmd->add_option("--exp-tol", vopt.tol_exponential, "exponential tolerance");
  verify_cmd->add_option("--samples", vopt.samples, "random samples per group check");
  verify_cmd->add_option("--seed", vopt.seed, "random seed");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verification sweep over signatures");
  sweep_cmd->add_option("--max-n", max_n, "largest p+q")->check(CLI::Range(1, 12));
  sweep_cmd->add_option("--algebra", algebra, "row number, name, or 'all'");
  sweep_cmd->add_option("--format", sweep_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  sweep_cmd->add_option("--out", sweep_out, "write output to file");
  sweep_cmd->add_option("--tol", vopt.tol_structural, "structural tolerance");
  sweep_cmd->add_option("--exp-tol", vopt.tol_exponential, "exponential tolerance");
  sweep_cmd->add_option("--samples", vopt.samples, "random samples per group check");
  sweep_cmd->add_option("--seed", vopt.seed, "random seed");
  sweep_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (dims->parsed()) return cmd_dims(common);
    if (repr->parsed()) return cmd_repr(common, normal_form);
    if (classify_cmd->parsed()) return cmd_classify(common, algebra);
    if (verify_cmd->parsed()) return cmd_verify(common, algebra, vopt);
    if (sweep_cmd->parsed())
      return cmd_sweep(max_n, algebra, sweep_format, sweep_out, vopt, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
