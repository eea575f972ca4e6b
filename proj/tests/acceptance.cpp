// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "oracle.hpp"
#include "process.hpp"
#include "sutra/cli.hpp"
#include "sutra/engine.hpp"
#include "sutra/service.hpp"

using namespace sutra;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << detail << ")\n";
  if (!ok) ++failures;
}

oracle::Int asOracle(const ExactValue& v) { return oracle::value(v.str()); }
oracle::Int asOracle(const DigitString& d) { return oracle::value(normalize(d).str()); }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

struct Case {
  Operation op;
  std::vector<std::string> operands;
};

std::vector<Case> corpus(Operation op, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> addends(2, kMaxAddends);
  std::vector<Case> out;
  for (std::size_t i = 0; i < count; ++i) {
    Case c{op, {}};
    const std::size_t arity = op == Operation::Add ? addends(rng) : op == Operation::Sqrt ? 1 : 2;
    for (std::size_t k = 0; k < arity; ++k) c.operands.push_back(oracle::randomNumber(rng, 1, 9));
    if (op == Operation::Subtract && oracle::value(c.operands[0]) < oracle::value(c.operands[1])) {
      std::swap(c.operands[0], c.operands[1]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<DigitString> parsed(const std::vector<std::string>& texts) {
  std::vector<DigitString> out;
  for (const auto& t : texts) out.push_back(parseOperand(t));
  return out;
}

// Exact expectation for one case: (result, remainder).
std::pair<oracle::Int, oracle::Int> expected(const Case& c) {
  switch (c.op) {
    case Operation::Add: {
      oracle::Int s = 0;
      for (const auto& t : c.operands) s += oracle::value(t);
      return {s, 0};
    }
    case Operation::Subtract:
      return {oracle::value(c.operands[0]) - oracle::value(c.operands[1]), 0};
    case Operation::Multiply:
      return {oracle::value(c.operands[0]) * oracle::value(c.operands[1]), 0};
    case Operation::Sqrt:
      return oracle::floorSqrt(oracle::value(c.operands[0]));
  }
  return {0, 0};
}

// Criteria 1 to 3 share the same corpus.
void corpusCriteria() {
  std::mt19937_64 rng(20261017);
  std::size_t mismatches = 0, disagreements = 0, replayErrors = 0, traces = 0;
  const auto start = std::chrono::steady_clock::now();
  for (auto op : {Operation::Add, Operation::Subtract, Operation::Multiply, Operation::Sqrt}) {
    for (const Case& c : corpus(op, 1000, rng)) {
      const auto ops = parsed(c.operands);
      const auto [value, rem] = expected(c);
      std::vector<Trace> pair;
      for (auto family : {Family::Vedic, Family::Traditional}) {
        const Trace t = buildTrace(methodIdFor(op, family), ops);
        ++traces;
        try {
          replay(t);
        } catch (const ReplayError&) {
          ++replayErrors;
        }
        const bool remOk = op != Operation::Sqrt || (t.remainder && asOracle(*t.remainder) == rem);
        if (asOracle(t.result) != value || !remOk) ++mismatches;
        pair.push_back(t);
      }
      if (pair[0].result != pair[1].result || pair[0].remainder != pair[1].remainder) ++disagreements;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream time;
  time.precision(2);
  time << std::fixed << seconds << " s";
  report("oracle equivalence", mismatches == 0 && seconds < 10.0,
         std::to_string(traces) + " traces, " + std::to_string(mismatches) + " mismatches, " + time.str());
  report("cross-family agreement", disagreements == 0, std::to_string(disagreements) + " disagreements over 4000 cases");
  report("replay validation", replayErrors == 0, std::to_string(replayErrors) + " replay errors over " +
                                                     std::to_string(traces) + " traces");
}

// Every length (pair) from 1 to 6, with extreme and random values for each.
void stepCountCriterion() {
  std::mt19937_64 rng(7);
  std::size_t checked = 0, bad = 0;
  auto samples = [&](std::size_t len) {
    std::vector<std::string> v{std::string(len, '9'), "1" + std::string(len - 1, '0')};
    for (int i = 0; i < 20; ++i) v.push_back(oracle::randomNumber(rng, len));
    return v;
  };
  for (std::size_t la = 1; la <= 6; ++la) {
    for (std::size_t lb = 1; lb <= 6; ++lb) {
      const auto as = samples(la), bs = samples(lb);
      for (std::size_t i = 0; i < as.size(); ++i) {
        const std::vector<std::string> texts{as[i], bs[i]};
        const auto ops = parsed(texts);
        const std::size_t n = std::max(la, lb);

        const Trace m = buildTrace("vedic.multiply.crisscross", ops);
        const bool productCarry = oracle::value(as[i]) * oracle::value(bs[i]) >= oracle::pow10(2 * n - 1);
        if (m.metrics.mainSteps != 2 * n - 1 + (productCarry ? 1 : 0)) ++bad;
        if (m.metrics.digitMultiplications != n * n) ++bad;

        const Trace a = buildTrace("vedic.add.placevalue", ops);
        const bool sumCarry = oracle::value(as[i]) + oracle::value(bs[i]) >= oracle::pow10(n);
        if (a.metrics.mainSteps != n + (sumCarry ? 1 : 0)) ++bad;
        checked += 2;
      }
    }
    // Many addends of one length.
    for (std::size_t t = 0; t < 20; ++t) {
      std::vector<std::string> texts;
      for (std::size_t k = 0; k < 1 + t % 9; ++k) texts.push_back(oracle::randomNumber(rng, 1, la));
      texts.push_back(samples(la)[t % 2]);
      oracle::Int sum = 0;
      for (const auto& s : texts) sum += oracle::value(s);
      const Trace a = buildTrace("vedic.add.placevalue", parsed(texts));
      if (a.metrics.mainSteps != la + (sum >= oracle::pow10(la) ? 1 : 0)) ++bad;
      ++checked;
    }
    for (const auto& x : samples(la)) {
      const Trace s = buildTrace("vedic.sqrt.duplex", parsed({x}));
      std::size_t adjustments = 0;
      for (const auto& st : s.steps) adjustments += st.description.starts_with("Adjustment") ? 1 : 0;
      if (s.steps.size() - adjustments != (la + 1) / 2) ++bad;
      ++checked;
    }
  }
  // Every sqrt input of up to 6 digits is cheap enough to run outright.
  for (unsigned long x = 0; x < 1000000; x += 7) {
    const std::string xs = std::to_string(x);
    const MethodRun run = duplexSqrt(parseOperand(xs)).run;
    std::size_t adjustments = 0;
    for (const auto& st : run.steps) adjustments += st.description.starts_with("Adjustment") ? 1 : 0;
    if (run.steps.size() - adjustments != (xs.size() + 1) / 2) ++bad;
    ++checked;
  }
  report("step-count formulas", bad == 0, std::to_string(checked) + " traces, " + std::to_string(bad) + " violations");
}

void narrativeCriterion() {
  const std::vector<std::string> expectedPhrases{"one's digits", "2 rightmost columns", "all 3 columns",
                                                 "2 leftmost columns", "highest place"};
  auto ordered = [&](const std::vector<MainStep>& steps) {
    if (steps.size() < expectedPhrases.size()) return false;
    for (std::size_t k = 0; k < expectedPhrases.size(); ++k) {
      if (steps[k].description.find(expectedPhrases[k]) == std::string::npos) return false;
    }
    return true;
  };
  std::mt19937_64 rng(3);
  bool ok = true;
  for (int i = 0; i < 200; ++i) {
    const std::vector<std::string> texts{oracle::randomNumber(rng, 3), oracle::randomNumber(rng, 3)};
    ok = ok && ordered(buildTrace("vedic.multiply.crisscross", parsed(texts)).steps);
  }
  const golden::Case& g = golden::cases()[4];
  bool goldenOk = false;
  try {
    goldenOk = ordered(parseTrace(testproc::readFile(golden::path(g))).steps);
  } catch (const std::exception&) {
  }
  report("3x3 column grouping order", ok && goldenOk,
         std::string("200 random inputs ") + (ok ? "ok" : "wrong") + ", golden " + g.operands + " " +
             (goldenOk ? "ok" : "wrong"));
}

void determinismCriterion() {
  std::size_t same = 0, goldenSame = 0;
  for (const auto& c : golden::cases()) {
    const std::string cmd = testproc::cli("trace --format json --method " + c.method + " --operands " + c.operands);
    const auto first = testproc::run(cmd), second = testproc::run(cmd);
    if (first.exitCode == 0 && first.out == second.out && !first.out.empty()) ++same;
    if (first.out == testproc::readFile(golden::path(c))) ++goldenSame;
  }
  const std::size_t n = golden::cases().size();
  report("determinism", same == n && goldenSame == n,
         std::to_string(same) + "/" + std::to_string(n) + " identical across processes, " + std::to_string(goldenSame) +
             "/" + std::to_string(n) + " equal to golden files");
}

void warningCriterion() {
  struct W {
    std::string method, operation, operands, code;
  };
  const std::string big(51, '8');
  const std::vector<W> cases{{"vedic.subtract.complement", "subtract", "12,345", codes::kNegativeResult},
                             {"traditional.subtract.borrow", "subtract", "12,345", codes::kNegativeResult},
                             {"vedic.sqrt.duplex", "sqrt", "4,9", codes::kArity},
                             {"vedic.multiply.crisscross", "multiply", "7", codes::kArity},
                             {"vedic.add.placevalue", "add", "1,1,1,1,1,1,1,1,1,1,1", codes::kArity},
                             {"vedic.add.placevalue", "add", big + ",1", codes::kOperandTooLong},
                             {"traditional.multiply.long", "multiply", "2," + big, codes::kOperandTooLong}};
  std::size_t ok = 0;
  for (const auto& w : cases) {
    bool library = false;
    try {
      buildTrace(w.method, cli::parseOperandList(w.operands));
    } catch (const ApplicabilityError& e) {
      library = !e.warnings().empty() && e.warnings()[0].code == w.code && e.warnings()[0].blocking &&
                !e.warnings()[0].message.empty();
    }
    const auto proc = testproc::run(testproc::cli("trace --method " + w.method + " --operands " + w.operands + " 2>&1"));
    const bool cliOk = proc.exitCode == 3 && proc.out.find(w.code) != std::string::npos;

    Json body{{"operation", w.operation}, {"operands", Json::array()}};
    for (const auto& o : cli::parseOperandList(w.operands)) body["operands"].push_back(o.str());
    const auto resp = service::handle("POST", "/api/trace", body.dump());
    bool serviceOk = false;
    if (resp.status == 422) {
      const Json j = Json::parse(resp.body);
      serviceOk = j.at("code") == w.code && !j.at("warnings").empty() && j.at("warnings")[0].at("blocking") == true;
    }
    if (library && cliOk && serviceOk) ++ok;
  }
  report("warning behavior", ok == cases.size(),
         std::to_string(ok) + "/" + std::to_string(cases.size()) + " cases blocked in library, CLI (exit 3), service (422)");
}

void consistencyCriterion() {
  std::vector<std::pair<std::string, std::string>> inputs;
  for (const auto& c : golden::cases()) inputs.push_back({c.method, c.operands});
  std::mt19937_64 rng(11);
  for (const auto& m : listMethods()) {
    for (int i = 0; i < 3; ++i) {
      std::vector<std::string> texts;
      for (std::size_t k = 0; k < m.minOperands; ++k) texts.push_back(oracle::randomNumber(rng, 1, 9));
      if (m.operation == Operation::Subtract && oracle::value(texts[0]) < oracle::value(texts[1])) {
        std::swap(texts[0], texts[1]);
      }
      inputs.push_back({m.id, join(texts)});
    }
  }
  std::size_t equal = 0;
  for (const auto& [method, operands] : inputs) {
    const auto proc = testproc::run(testproc::cli("trace --format json --method " + method + " --operands " + operands));
    Json body{{"methodId", method}, {"operands", Json::array()}};
    for (const auto& o : cli::parseOperandList(operands)) body["operands"].push_back(o.str());
    const auto resp = service::handle("POST", "/api/trace", body.dump());
    if (proc.exitCode == 0 && resp.status == 200 && proc.out == resp.body) ++equal;
  }
  // The comparison form must match `compare --format json` as well.
  const auto cmp = testproc::run(testproc::cli("compare --format json --operation multiply --operands 12,345"));
  const auto cmpResp = service::handle("POST", "/api/trace", R"({"operation":"multiply","operands":["12","345"]})");
  const bool compareOk = cmp.exitCode == 0 && cmp.out == cmpResp.body;
  report("CLI/service consistency", equal == inputs.size() && compareOk,
         std::to_string(equal) + "/" + std::to_string(inputs.size()) + " trace bodies byte-equal, compare " +
             (compareOk ? "equal" : "different"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{corpusCriteria,       stepCountCriterion, narrativeCriterion,
                                                    determinismCriterion, warningCriterion,   consistencyCriterion};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      report("criterion raised", false, e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
