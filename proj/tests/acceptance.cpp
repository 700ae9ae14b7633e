// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "circdiv/cli.hpp"
#include "circdiv/constructibility.hpp"
#include "circdiv/dsl.hpp"
#include "circdiv/errors.hpp"
#include "circdiv/methods.hpp"
#include "circdiv/numfmt.hpp"
#include "circdiv/rectification.hpp"
#include "corpus.hpp"

using namespace circdiv;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct PrintedRow {
  long n;
  double approx;
  double error;
  double rel_error;
};

// Published 4-decimal tables, n = 4..20.
constexpr std::array<PrintedRow, 17> kBionTable = {{
    {4, 1.571, 0, 0},          {5, 1.256, 0.0008, 0.0006},    {6, 1.047, 0, 0},
    {7, 0.8992, -0.0016, 0.0017}, {8, 0.7887, -0.0033, 0.0042}, {9, 0.7030, -0.0048, 0.0069},
    {10, 0.6345, -0.0062, 0.0099}, {11, 0.5785, -0.0073, 0.0129}, {12, 0.5319, -0.0083, 0.0158},
    {13, 0.4923, -0.009, 0.0186}, {14, 0.4584, -0.0096, 0.0214}, {15, 0.4289, -0.01, 0.024},
    {16, 0.4031, -0.0104, 0.0265}, {17, 0.3803, -0.0107, 0.0288}, {18, 0.3599, -0.0108, 0.0311},
    {19, 0.3417, -0.011, 0.0332}, {20, 0.3252, -0.0111, 0.0352},
}};

constexpr std::array<PrintedRow, 17> kTempierTable = {{
    {4, 1.571, 0, 0},            {5, 1.246, 0.0111, 0.0088},   {6, 1.039, 0.0083, 0.0079},
    {7, 0.8923, 0.0053, 0.0059}, {8, 0.7821, 0.0033, 0.0042},  {9, 0.6962, 0.0019, 0.0027},
    {10, 0.6273, 0.001, 0.0016}, {11, 0.5708, 0.0004, 0.0007}, {12, 0.5236, 0, 0},
    {13, 0.4836, -0.0003, 0.0006}, {14, 0.4493, -0.0005, 0.001}, {15, 0.4195, -0.0006, 0.0014},
    {16, 0.3934, -0.0007, 0.0017}, {17, 0.3703, -0.0007, 0.002}, {18, 0.3498, -0.0008, 0.0022},
    {19, 0.3315, -0.0008, 0.0024}, {20, 0.315, -0.0008, 0.0026},
}};

class Report {
 public:
  void fail(const std::string& why) {
    if (problems_.size() < 5) problems_.push_back(why);
    ++count_;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void expect_near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g (tol %g)", what.c_str(), got, want,
                    tol);
      fail(buf);
    }
  }
  bool ok() const { return count_ == 0; }
  const std::vector<std::string>& problems() const { return problems_; }
  int count() const { return count_; }

 private:
  std::vector<std::string> problems_;
  int count_ = 0;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Report&)>& body) {
  Report r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("unexpected exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s\n", r.ok() ? "PASS" : "FAIL", id, title);
  for (const auto& p : r.problems()) std::printf("    %s\n", p.c_str());
  if (r.count() > static_cast<int>(r.problems().size())) {
    std::printf("    ... %d more\n", r.count() - static_cast<int>(r.problems().size()));
  }
  if (!r.ok()) ++failures;
}

void table_regression(Report& r, Method m, const std::array<PrintedRow, 17>& printed) {
  const auto rows = error_table(m, 4, 20);
  r.expect(rows.size() == printed.size(), "row count");
  for (std::size_t i = 0; i < rows.size() && i < printed.size(); ++i) {
    const auto& got = rows[i];
    const auto& want = printed[i];
    const std::string tag = std::string(to_string(m)) + " n=" + std::to_string(want.n);
    r.expect(got.n == want.n, tag + " index");
    r.expect_near(got.approx, want.approx, 1e-3, tag + " approx");
    r.expect_near(got.error, want.error, 1e-3, tag + " error");
    r.expect_near(got.rel_error, want.rel_error, 1e-3, tag + " rel_error");
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Euler's totient is a power of two exactly for constructible polygons.
bool totient_power_of_two(std::uint64_t n) {
  std::uint64_t phi = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      phi -= phi / p;
    }
  }
  if (m > 1) phi -= phi / m;
  return (phi & (phi - 1)) == 0;
}

}  // namespace

int main() {
  criterion(1, "Bion table matches the published values", [](Report& r) {
    table_regression(r, Method::bion, kBionTable);
  });

  criterion(2, "Tempier table matches the published values, exact rows exact", [](Report& r) {
    table_regression(r, Method::tempier, kTempierTable);
    for (long n : {4L, 12L}) {
      const auto row = error_table(Method::tempier, n, n).front();
      r.expect_near(row.error, 0.0, 1e-12, "tempier n=" + std::to_string(n) + " unrounded error");
    }
  });

  criterion(3, "relative errors converge to the closed-form limits", [](Report& r) {
    const long n = 1'000'000;
    r.expect_near(signed_relative_error(Method::bion, n), 1.0 - 2.0 * std::numbers::sqrt3 / kPi,
                  1e-4, "bion rel error at n=1e6");
    r.expect_near(signed_relative_error(Method::tempier, n),
                  -(6.0 + 2.0 * std::numbers::sqrt3 - 3.0 * kPi) / (3.0 * kPi), 1e-4,
                  "tempier rel error at n=1e6");
    const std::string bion = format_fixed(relative_error_limit(Method::bion), 4);
    const std::string tempier = format_fixed(relative_error_limit(Method::tempier), 4);
    r.expect(bion == "-0.1026", "bion limit to 4 d.p. is " + bion + ", expected -0.1026");
    r.expect(tempier == "-0.0042", "tempier limit to 4 d.p. is " + tempier + ", expected -0.0042");
  });

  criterion(4, "construction programs agree with the closed forms for n in [4, 200]",
            [](Report& r) {
              for (Method m : {Method::bion, Method::tempier}) {
                for (long n = 4; n <= 200; ++n) {
                  const double via_kernel =
                      dsl::evaluate(construction_program(m, n)).scalar("theta");
                  r.expect_near(via_kernel, method_angle(m, n), 1e-10,
                                std::string(to_string(m)) + " n=" + std::to_string(n));
                }
              }
            });

  criterion(5, "exact cases are exact", [](Report& r) {
    r.expect_near(bion_angle(4), kPi / 2, 1e-12, "bion(4)");
    r.expect_near(bion_angle(6), kPi / 3, 1e-12, "bion(6)");
    r.expect_near(tempier_angle(4), kPi / 2, 1e-12, "tempier(4)");
    r.expect_near(tempier_angle(12), kPi / 6, 1e-12, "tempier(12)");
    const Point g6 = dsl::evaluate(bion_program(6)).point("G");
    const Point g12 = dsl::evaluate(tempier_program(12)).point("G");
    r.expect_near((g6 - g12).norm(), 0.0, 1e-7, "G of bion 6 vs tempier 12");
  });

  criterion(6, "relative error peaks at n=5 then decreases; tempier stays under 0.9%",
            [](Report& r) {
              for (Method m : {Method::bion, Method::tempier}) {
                const std::string name(to_string(m));
                const double peak = signed_relative_error(m, 5);
                for (long n = 4; n <= 1000; ++n) {
                  if (n != 5) {
                    r.expect(signed_relative_error(m, n) < peak,
                             name + " n=" + std::to_string(n) + " exceeds n=5");
                  }
                }
                const long from = m == Method::bion ? 6 : 5;
                for (long n = from; n < 1000; ++n) {
                  r.expect(signed_relative_error(m, n + 1) < signed_relative_error(m, n),
                           name + " not strictly decreasing at n=" + std::to_string(n));
                }
              }
              for (long n = 4; n <= 1000; ++n) {
                r.expect(std::abs(signed_relative_error(Method::tempier, n)) < 0.009,
                         "tempier |rel| >= 0.009 at n=" + std::to_string(n));
              }
            });

  criterion(7, "method comparison", [](Report& r) {
    const auto want = [&](long n, Verdict v) {
      r.expect(best_method(n) == v, "n=" + std::to_string(n) + " gave " +
                                        std::string(to_string(best_method(n))));
    };
    for (long n : {5L, 6L, 7L}) want(n, Verdict::bion);
    for (long n : {4L, 8L}) want(n, Verdict::tie);
    for (long n = 9; n <= 100; ++n) want(n, Verdict::tempier);
  });

  criterion(8, "quadrant rectification", [](Report& r) {
    r.expect_near(rectified_quadrant(7.0 / 4.0).implied_pi, 22.0 / 7.0, 1e-12, "d = 7/4");
    r.expect_near(rectified_quadrant(2.0 / (kPi - 2.0)).implied_pi, kPi, 1e-12, "d = 2/(pi-2)");
    r.expect_near(rectified_quadrant(exact_rectifier_distance()).implied_pi, kPi, 1e-12,
                  "exact rectifier distance");
    const double at_v = rectified_quadrant(std::numbers::sqrt3).implied_pi;
    r.expect_near(at_v, 3.15470, 1e-5, "d = sqrt3");
    r.expect_near(relative_error_limit(Method::tempier), 1.0 - at_v / kPi, 1e-12,
                  "tempier limit vs implied pi");
  });

  criterion(9, "constructibility verdicts", [](Report& r) {
    const std::vector<std::uint64_t> frozen = {3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20};
    std::vector<std::uint64_t> got;
    for (std::uint64_t n = 3; n <= 20; ++n) {
      if (check(n).constructible) got.push_back(n);
    }
    r.expect(got == frozen, "constructible set for 3..20 differs from the frozen list");
    r.expect(constructible_up_to(20) == frozen, "constructible_up_to(20)");
    const auto nine = check(9);
    r.expect(nine.obstruction && nine.obstruction->kind == Obstruction::Kind::repeated_prime &&
                 nine.obstruction->prime == 3,
             "check(9) obstruction");
    r.expect(nine.describe() == "9: NOT constructible (3 appears twice)", nine.describe());
    for (std::uint64_t n = 3; n <= 150; ++n) {
      const bool c = check(n).constructible;
      r.expect(c == totient_power_of_two(n), "totient oracle disagrees at n=" + std::to_string(n));
      if (c) r.expect(check(2 * n).constructible, "2n not constructible for n=" + std::to_string(n));
    }
  });

  criterion(10, "construction language round-trips and reports malformed input", [](Report& r) {
    std::vector<dsl::Program> programs;
    for (long n = 4; n <= 50; ++n) {
      programs.push_back(bion_program(n));
      programs.push_back(tempier_program(n));
    }
    const auto& handwritten = testing::handwritten_programs();
    r.expect(handwritten.size() >= 20, "handwritten corpus too small");
    for (const auto& text : handwritten) programs.push_back(dsl::parse(text));
    for (const auto& p : programs) {
      const std::string text = dsl::format(p);
      const dsl::Program back = dsl::parse(text);
      r.expect(back == p, "parse(format(p)) != p for:\n" + text);
      r.expect(dsl::format(back) == text, "format not stable for:\n" + text);
    }
    const auto& malformed = testing::malformed_programs();
    r.expect(malformed.size() >= 15, "malformed corpus too small");
    for (const auto& c : malformed) {
      try {
        dsl::parse(c.text);
        r.fail("accepted: " + c.text);
      } catch (const ParseError& e) {
        r.expect(e.line() == c.line && e.column() == c.column,
                 "wrong position " + std::string(e.what()) + " for: " + c.text);
      } catch (const std::exception& e) {
        r.fail("non-parse error " + std::string(e.what()) + " for: " + c.text);
      }
    }
  });

  criterion(11, "table, polygon --svg and run are byte-deterministic", [](Report& r) {
    const fs::path dir = fs::temp_directory_path() / "circdiv_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto cli = [&](std::vector<std::string> args, const fs::path& stdout_file) {
      std::ofstream out(stdout_file, std::ios::binary);
      std::ostringstream err;
      const int code = run_cli(args, out, err);
      r.expect(code == kExitOk, "exit " + std::to_string(code) + ": " + err.str());
    };
    const std::string program = (dir / "prog.euc").string();
    cli({"construct", "tempier", "17", "-o", program}, dir / "construct.out");
    for (int run = 1; run <= 2; ++run) {
      const std::string k = std::to_string(run);
      cli({"table", "bion", "--from", "4", "--to", "60"}, dir / ("table" + k + ".csv"));
      cli({"table", "tempier", "--format", "json", "--paper"}, dir / ("table" + k + ".json"));
      cli({"polygon", "bion", "9", "--svg", (dir / ("poly" + k + ".svg")).string()},
          dir / ("poly" + k + ".out"));
      cli({"run", program, "--svg", (dir / ("run" + k + ".svg")).string()},
          dir / ("run" + k + ".out"));
    }
    for (const char* stem : {"table%.csv", "table%.json", "poly%.svg", "poly%.out", "run%.svg",
                             "run%.out"}) {
      std::string a(stem);
      std::string b(stem);
      a.replace(a.find('%'), 1, "1");
      b.replace(b.find('%'), 1, "2");
      const std::string first = slurp(dir / a);
      r.expect(!first.empty(), a + " is empty");
      r.expect(first == slurp(dir / b), a + " and " + b + " differ");
    }
    fs::remove_all(dir);
  });

  return failures == 0 ? 0 : 1;
}
