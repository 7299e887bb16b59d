#include "uj/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uj/acceptance.hpp"
#include "uj/io.hpp"
#include "uj/parallel.hpp"

namespace uj::cli {

namespace {

using io::json;

const std::string& require_path(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing required option ") + flag);
  return path;
}

UnsharpParam require_lambda(const RunConfig& c) {
  if (!c.lambda) throw Error(ErrorCode::InvalidArgument, "missing required option --lambda");
  return UnsharpParam(*c.lambda);
}

DensityMatrix load_state(const RunConfig& c) {
  return c.state.empty() ? singlet() : io::state_from_json(io::read_file(c.state));
}

ChshSettings load_settings(const RunConfig& c) {
  return c.settings.empty() ? optimal_qubit_settings() : io::settings_from_json(io::read_file(c.settings));
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.output);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

unsigned threads_from_env() {
  if (const char* s = std::getenv("UJ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void validate(const RunConfig& c) {
  if (!(c.tol >= 1e-12 && c.tol <= 1e-2)) {
    std::ostringstream os;
    os << "tol " << c.tol << " outside [1e-12, 1e-2]";
    throw Error(ErrorCode::ValidationError, os.str());
  }
  if (c.command == Command::Sweep) {
    if (!(c.start > 0 && c.start <= c.stop && c.stop <= 1 && c.step > 0))
      throw Error(ErrorCode::ValidationError, "sweep grid needs 0 < start <= stop <= 1 and step > 0");
  }
  if (c.command == Command::LambdaOpt && c.mode != "worst-case" && c.mode != "pair")
    throw Error(ErrorCode::ValidationError, "mode must be worst-case or pair");
}

std::vector<SweepRow> sweep(const RunConfig& c) {
  const DensityMatrix state = load_state(c);
  const ChshSettings settings = load_settings(c);
  const auto count = static_cast<std::size_t>(std::floor((c.stop - c.start) / c.step + 1e-9)) + 1;
  std::vector<SweepRow> rows(count);
  parallel_for(count, c.threads, [&](std::size_t i) {
    const double l = std::min(1.0, c.start + static_cast<double>(i) * c.step);
    const UnsharpParam lambda(l);
    SweepRow& row = rows[i];
    row.lambda = l;
    row.verdict = to_string(decide_joint(settings.a1, settings.a2, lambda).feasible);
    row.smeared_chsh = smeared_chsh(state, settings, lambda).value;
    row.bound = 2.0 / l;
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "lambda,feasible,smeared_chsh,bound\n";
  for (const SweepRow& r : rows)
    out += format_number(r.lambda) + "," + r.verdict + "," + format_number(r.smeared_chsh) + "," +
           format_number(r.bound) + "\n";
  return out;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    switch (c.command) {
      case Command::Smear: {
        const auto obs = io::observable_from_json(io::read_file(require_path(c.obs, "--obs")));
        json j = json::object();
        j["schema"] = io::kSchema;
        j["lambda"] = require_lambda(c).value();
        const json o = io::to_json(smear(obs, require_lambda(c)));
        j["yes"] = o["yes"];
        j["no"] = o["no"];
        write(c, out, dump(j));
        return 0;
      }
      case Command::Blocks: {
        const Matrix p = io::matrix_from_json(io::read_file(require_path(c.p, "--p")));
        const Matrix q = io::matrix_from_json(io::read_file(require_path(c.q, "--q")));
        write(c, out, dump(io::to_json(two_projector_blocks(p, q))));
        return 0;
      }
      case Command::Dilate: {
        const auto obs = io::observable_from_json(io::read_file(require_path(c.obs, "--obs")));
        write(c, out, dump(io::to_json(neumark_dilate(obs))));
        return 0;
      }
      case Command::JointlyMeasurable: {
        const auto o1 = io::observable_from_json(io::read_file(require_path(c.o1, "--o1")));
        const auto o2 = io::observable_from_json(io::read_file(require_path(c.o2, "--o2")));
        const UnsharpParam lambda = require_lambda(c);
        const FeasibilityReport r = decide_joint(o1, o2, lambda);
        json j = io::to_json(r);
        j["lambda"] = lambda.value();
        if (c.oracle) {
          json oj = io::to_json(feasibility_oracle(smear(o1, lambda), smear(o2, lambda)));
          oj.erase("schema");
          j["oracle"] = std::move(oj);
        }
        write(c, out, dump(j));
        return (c.expect_feasible && r.feasible != Verdict::Yes) ? 2 : 0;
      }
      case Command::LambdaOpt: {
        LambdaOptResult r;
        if (c.mode == "worst-case") {
          WorstCase wc;
          wc.mesh_size = c.mesh;
          wc.seed = c.seed;
          wc.threads = c.threads;
          r = lambda_opt_search(wc, c.tol);
        } else {
          const auto o1 = io::observable_from_json(io::read_file(require_path(c.o1, "--o1")));
          const auto o2 = io::observable_from_json(io::read_file(require_path(c.o2, "--o2")));
          r = lambda_opt_search(ObservablePair{o1, o2}, c.tol);
        }
        json j = io::to_json(r);
        j["mode"] = c.mode;
        j["tol"] = c.tol;
        write(c, out, dump(j));
        return 0;
      }
      case Command::Chsh: {
        const DensityMatrix state = load_state(c);
        const ChshSettings settings = load_settings(c);
        const ChshReport r = c.lambda ? smeared_chsh(state, settings, UnsharpParam(*c.lambda)) : chsh(state, settings);
        write(c, out, dump(io::to_json(r)));
        return 0;
      }
      case Command::BoxChsh: {
        const auto box = io::box_from_json(io::read_file(require_path(c.box, "--box")));
        write(c, out, dump(io::box_chsh_to_json(box)));
        return 0;
      }
      case Command::Sweep: {
        const auto rows = sweep(c);
        if (c.format == Format::Csv) {
          write(c, out, sweep_csv(rows));
        } else {
          json arr = json::array();
          for (const SweepRow& r : rows) {
            json row = json::object();
            row["lambda"] = r.lambda;
            row["feasible"] = r.verdict;
            row["smeared_chsh"] = r.smeared_chsh;
            row["bound"] = r.bound;
            arr.push_back(std::move(row));
          }
          json j = json::object();
          j["schema"] = io::kSchema;
          j["rows"] = std::move(arr);
          write(c, out, dump(j));
        }
        return 0;
      }
      case Command::Acceptance: {
        std::ostringstream log;
        const auto results = acceptance::run_all(c.threads, log);
        bool all = true;
        for (const auto& r : results) all = all && r.pass;
        write(c, out, log.str());
        return all ? 0 : 1;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace uj::cli
