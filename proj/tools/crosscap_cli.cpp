// crosscap: decide, factor and verify automorphisms of surface homology.
//
// Exit codes: 0 yes/accept/success, 1 no/reject, 2 invalid input,
// 3 resource limit or internal failure.

#include <crosscap/crosscap.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>

namespace {

enum Exit { kYes = 0, kNo = 1, kInvalid = 2, kFailure = 3 };

struct Failure {
  int exit_code;
  std::string message;
};

void check(cc_status s, const std::string& context) {
  if (s == CC_OK) return;
  throw Failure{cc_status_is_input_error(s) ? kInvalid : kFailure,
                context + ": " + cc_status_name(s) + ": " + cc_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInvalid, "cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kFailure, "cannot write " + path};
}

struct StringDeleter {
  void operator()(char* s) const { cc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Instance = std::unique_ptr<cc_instance, HandleDeleter<cc_instance, cc_instance_free>>;
using Decision = std::unique_ptr<cc_decision, HandleDeleter<cc_decision, cc_decision_free>>;
using Certificate = std::unique_ptr<cc_certificate, HandleDeleter<cc_certificate, cc_certificate_free>>;
using Enumeration = std::unique_ptr<cc_enumeration, HandleDeleter<cc_enumeration, cc_enumeration_free>>;

Instance load_instance(const std::string& path) {
  cc_instance* raw = nullptr;
  check(cc_instance_from_json(read_file(path).c_str(), &raw), path);
  return Instance(raw);
}

Decision decide(const cc_instance* inst, bool row_descent) {
  cc_decide_options opt{};
  opt.kernel_row_descent = row_descent ? 1 : 0;
  cc_decision* raw = nullptr;
  check(cc_decide(inst, &opt, &raw), "decide");
  return Decision(raw);
}

std::string move_text(const nlohmann::json& m) {
  const std::string type = m.at("type");
  if (type == "crosscap_slide")
    return "e(" + std::to_string(m.at("i").get<int>()) + "," + std::to_string(m.at("j").get<int>()) + ")";
  if (type == "boundary_slide")
    return "h(" + std::to_string(m.at("i").get<int>()) + "," + std::to_string(m.at("j").get<int>()) + ")";
  return m.dump();
}

// One line per reducing step: stage, phase, row, side, complexity drop, moves.
void print_trace(const cc_certificate* cert, std::ostream& os) {
  char* raw = nullptr;
  check(cc_certificate_trace_json(cert, &raw), "trace");
  const OwnedString text(raw);
  const auto j = nlohmann::json::parse(text.get());
  for (const char* stage : {"kernel", "boundary"}) {
    for (const auto& step : j.at(stage)) {
      os << stage << ' ' << step.at("phase").get<std::string>();
      if (step.at("row").get<int>() != 0) os << " row=" << step.at("row").get<int>();
      os << ' ' << step.at("side").get<std::string>() << ' ' << step.at("before").get<std::string>() << " -> "
         << step.at("after").get<std::string>() << " :";
      for (const auto& m : step.at("moves")) os << ' ' << move_text(m);
      os << '\n';
    }
  }
}

int run_check(const std::string& path, bool trace, bool row_descent) {
  const Instance inst = load_instance(path);
  const Decision d = decide(inst.get(), row_descent);
  if (!cc_decision_realizable(d.get())) {
    std::cout << "not realizable: " << cc_decision_reason(d.get()) << '\n';
    return kNo;
  }
  std::cout << "realizable (" << cc_decision_completeness(d.get()) << ")\n";
  if (trace) {
    cc_certificate* raw = nullptr;
    check(cc_decision_certificate(d.get(), &raw), "certificate");
    const Certificate cert(raw);
    print_trace(cert.get(), std::cerr);
  }
  return kYes;
}

int run_factor(const std::string& path, const std::string& output, bool trace, bool row_descent) {
  const Instance inst = load_instance(path);
  const Decision d = decide(inst.get(), row_descent);
  if (!cc_decision_realizable(d.get())) {
    std::cerr << "not realizable: " << cc_decision_reason(d.get()) << '\n';
    return kNo;
  }
  cc_certificate* raw = nullptr;
  check(cc_decision_certificate(d.get(), &raw), "certificate");
  const Certificate cert(raw);
  char* json = nullptr;
  check(cc_certificate_to_json(cert.get(), trace ? 1 : 0, &json), "certificate");
  const OwnedString text(json);
  write_output(output, text.get());
  if (trace) print_trace(cert.get(), std::cerr);
  std::cerr << cc_certificate_move_count(cert.get()) << " moves, " << cc_decision_completeness(d.get()) << '\n';
  return kYes;
}

int run_verify(const std::string& instance_path, const std::string& cert_path) {
  const Instance inst = load_instance(instance_path);
  cc_certificate* raw = nullptr;
  check(cc_certificate_from_json(read_file(cert_path).c_str(), &raw), cert_path);
  const Certificate cert(raw);
  int accepted = 0;
  char* reason = nullptr;
  check(cc_verify(inst.get(), cert.get(), &accepted, &reason), "verify");
  const OwnedString why(reason);
  if (accepted) {
    std::cout << "accept\n";
    return kYes;
  }
  std::cout << "reject: " << (why ? why.get() : "") << '\n';
  return kNo;
}

int run_generate(int crosscaps, int punctures, std::size_t length, std::uint64_t seed, bool corrupt, bool permute,
                 const std::string& output) {
  cc_instance* raw = nullptr;
  check(cc_instance_generate(crosscaps, punctures, length, seed, corrupt ? 1 : 0, permute ? 1 : 0, &raw),
        "generate");
  const Instance inst(raw);
  char* json = nullptr;
  check(cc_instance_to_json(inst.get(), &json), "generate");
  const OwnedString text(json);
  write_output(output, text.get());
  return kYes;
}

int run_enumerate(int dim, bool as_json) {
  cc_enumeration* raw = nullptr;
  check(cc_enumerate(dim, &raw), "enumerate");
  const Enumeration e(raw);
  if (as_json) {
    char* json = nullptr;
    check(cc_enumeration_to_json(e.get(), &json), "enumerate");
    const OwnedString text(json);
    std::cout << text.get();
    return kYes;
  }
  std::cout << "dim " << dim << " order " << cc_enumeration_order(e.get()) << '\n';
  for (int len = 0; len <= cc_enumeration_max_length(e.get()); ++len)
    std::cout << "length " << len << ": " << cc_enumeration_count(e.get(), len) << '\n';
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of automorphisms of non-orientable surface homology"};
  app.require_subcommand(1);
  bool trace = false;
  bool row_descent = false;
  app.add_flag("--trace", trace, "Print the complexity descent of each reducing step to stderr");
  app.add_flag("--row-descent", row_descent, "Use the plain row-by-row kernel descent");

  std::string instance_path;
  std::string cert_path;
  std::string output;

  auto* check_cmd = app.add_subcommand("check", "Decide realizability (exit 0 yes, 1 no, 2 invalid)");
  check_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  check_cmd->fallthrough();

  auto* factor_cmd = app.add_subcommand("factor", "Write a certificate for a realizable instance");
  factor_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  factor_cmd->add_option("-o,--output", output, "Certificate JSON (default stdout)");
  factor_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate (exit 0 accept, 1 reject)");
  verify_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON")->required();

  int crosscaps = 1;
  int punctures = 0;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  bool corrupt = false;
  bool permute = false;
  auto* gen_cmd = app.add_subcommand("generate", "Sample a random instance from a generator word");
  gen_cmd->add_option("--crosscaps", crosscaps, "Number of crosscaps n")->required();
  gen_cmd->add_option("--punctures", punctures, "Number of boundary circles m");
  gen_cmd->add_option("--length", length, "Exact word length")->required();
  gen_cmd->add_option("--seed", seed, "Random seed")->required();
  gen_cmd->add_flag("--corrupt", corrupt, "Break mod-2 orthogonality (needs n >= 3)");
  gen_cmd->add_flag("--permute", permute, "Follow the word by a random crosscap permutation");
  gen_cmd->add_option("-o,--output", output, "Instance JSON (default stdout)");

  int dim = 1;
  bool as_json = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Order and word-length histogram of O(dim, F2)");
  enum_cmd->add_option("--dim", dim, "Dimension")->required();
  enum_cmd->add_flag("--json", as_json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kInvalid;
  }

  try {
    if (*check_cmd) return run_check(instance_path, trace, row_descent);
    if (*factor_cmd) return run_factor(instance_path, output, trace, row_descent);
    if (*verify_cmd) return run_verify(instance_path, cert_path);
    if (*gen_cmd) return run_generate(crosscaps, punctures, length, seed, corrupt, permute, output);
    if (*enum_cmd) return run_enumerate(dim, as_json);
  } catch (const Failure& f) {
    std::cerr << "crosscap: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "crosscap: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
