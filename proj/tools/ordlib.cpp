// ordlib: command-line front end for braid FDTC computations, order queries,
// cocycle checks, certificates and realisation export.

#include "ordlib/braid/garside.hpp"
#include "ordlib/braid/group.hpp"
#include "ordlib/cli/parse.hpp"
#include "ordlib/cocycle.hpp"
#include "ordlib/fdtc.hpp"
#include "ordlib/fixtures.hpp"
#include "ordlib/realization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using ordlib::Rational;
using ordlib::RationalInterval;
using ordlib::braid::BraidWord;

constexpr const char* kSchema = "ordlib/1";

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kResource = 3, kAmbiguous = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t toInt64(const ordlib::BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ordlib::ResourceLimitError("integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

Json toJson(const Rational& r) {
  return {{"num", toInt64(ordlib::numerator(r))}, {"den", toInt64(ordlib::denominator(r))}};
}

Json toJson(const RationalInterval& iv) { return {{"lo", toJson(iv.lo())}, {"hi", toJson(iv.hi())}}; }

Json document() { return {{"schema", kSchema}}; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// "<floorBudget>" or "<floorBudget>:<lengthFactor>"
ordlib::SearchBudget budgetFromEnvironment() {
  ordlib::SearchBudget b;
  const char* raw = std::getenv("ORDLIB_BUDGET");
  if (raw == nullptr || *raw == '\0') return b;
  const std::string text(raw);
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    const std::string first = text.substr(0, colon);
    b.floor = std::stoll(first, &used);
    if (used != first.size() || b.floor < 1) throw std::invalid_argument(first);
    if (colon != std::string::npos) {
      const std::string second = text.substr(colon + 1);
      const long long factor = std::stoll(second, &used);
      if (used != second.size() || factor < 1) throw std::invalid_argument(second);
      b.lengthFactor = static_cast<std::size_t>(factor);
    }
  } catch (const std::logic_error&) {
    throw UsageError("ORDLIB_BUDGET must be <floorBudget>[:<lengthFactor>] with positive integers, got '" + text + "'");
  }
  return b;
}

struct FixtureSpec {
  enum class Kind { Integers, CyclicLift, Braid } kind = Kind::Integers;
  int parameter = 0;
};

FixtureSpec parseFixture(const std::string& text, bool allowOthers) {
  auto parameter = [&](const std::string& prefix, int minimum) {
    const std::string rest = text.substr(prefix.size());
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(rest, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != rest.size() || v < minimum) {
      throw UsageError("bad group '" + text + "': expected " + prefix + "<int >= " + std::to_string(minimum) + ">");
    }
    return v;
  };
  if (text.rfind("zmod:", 0) == 0) return {FixtureSpec::Kind::CyclicLift, parameter("zmod:", 1)};
  if (allowOthers && text == "z") return {FixtureSpec::Kind::Integers, 0};
  if (allowOthers && text.rfind("braid:", 0) == 0) return {FixtureSpec::Kind::Braid, parameter("braid:", 2)};
  throw UsageError(allowOthers ? "group must be z, zmod:<n> or braid:<n>" : "group must be zmod:<n>");
}

// --- subcommands -------------------------------------------------------------

struct WordArgs {
  int strands = 0;
  std::string word;
};

int runFdtc(const WordArgs& a, int N, std::int64_t maxDen, bool json) {
  if (N < 1) throw UsageError("--N must be >= 1");
  if (maxDen < 1) throw UsageError("--max-den must be >= 1");
  const BraidWord w = ordlib::cli::parseBraid(a.word, a.strands);
  ordlib::FdtcResult r;
  try {
    r = ordlib::fdtcExact(w, N, maxDen, budgetFromEnvironment());
  } catch (const ordlib::AmbiguousReconstruction& e) {
    if (json) {
      Json out = document();
      out["strands"] = a.strands;
      out["word"] = a.word;
      out["error"] = "AmbiguousReconstruction";
      out["bounds"] = toJson(e.bounds());
      out["candidates"] = Json::array();
      for (const auto& c : e.candidates()) out["candidates"].push_back(toJson(c));
      emit(out);
    }
    throw;
  }
  if (json) {
    Json out = document();
    out["strands"] = a.strands;
    out["word"] = a.word;
    out["bounds"] = toJson(r.bounds);
    if (r.exact) out["exact"] = toJson(*r.exact);
    out["method"] = ordlib::toString(r.method);
    out["certified"] = r.certified;
    out["evidence"] = Json::array();
    for (const auto& e : r.evidence) out["evidence"].push_back({{"n", e.n}, {"floor", e.floor}});
    emit(out);
    return kOk;
  }
  std::cout << "bounds   " << r.bounds << '\n';
  if (r.exact) {
    std::cout << "exact    " << ordlib::toString(*r.exact) << "  " << r.method
              << (r.certified ? " (certified)" : " (not certified)") << '\n';
  } else {
    std::cout << "exact    none  " << r.method << '\n';
  }
  std::cout << "evidence";
  for (const auto& e : r.evidence) std::cout << ' ' << e.n << ':' << e.floor;
  std::cout << '\n';
  return kOk;
}

int runFloor(const WordArgs& a, bool json) {
  const BraidWord w = ordlib::cli::parseBraid(a.word, a.strands);
  const auto budget = budgetFromEnvironment();
  ordlib::braid::BraidGroup group(a.strands, budget.lengthFactor);
  const std::int64_t k = ordlib::floorOf(group, group.fullTwist(), w, budget.floor);
  if (json) {
    Json out = document();
    out["strands"] = a.strands;
    out["word"] = a.word;
    out["floor"] = k;
    emit(out);
  } else {
    std::cout << k << '\n';
  }
  return kOk;
}

int runCompare(int strands, const std::string& left, const std::string& right, bool json) {
  const BraidWord u = ordlib::cli::parseBraid(left, strands);
  const BraidWord v = ordlib::cli::parseBraid(right, strands);
  ordlib::braid::BraidGroup group(strands, budgetFromEnvironment().lengthFactor);
  const ordlib::OrderSign s = ordlib::compare(group, u, v);
  const char* relation = s == ordlib::OrderSign::Positive ? "<" : s == ordlib::OrderSign::Negative ? ">" : "=";
  if (json) {
    Json out = document();
    out["strands"] = strands;
    out["left"] = left;
    out["right"] = right;
    out["relation"] = relation;
    out["sign"] = ordlib::toString(s);
    emit(out);
  } else {
    std::cout << relation << '\n';
  }
  return kOk;
}

int runNormalForm(const WordArgs& a, bool json) {
  const BraidWord w = ordlib::cli::parseBraid(a.word, a.strands);
  const ordlib::braid::NormalForm nf = ordlib::braid::normalForm(w);
  std::vector<std::vector<int>> perms;
  for (const auto& f : nf.factors) {
    std::vector<int> p;
    for (auto x : f.permutation()) p.push_back(static_cast<int>(x) + 1);
    perms.push_back(std::move(p));
  }
  const std::string word = ordlib::braid::toString(ordlib::braid::toWord(nf));
  if (json) {
    Json out = document();
    out["strands"] = a.strands;
    out["deltaPower"] = nf.deltaPower;
    out["factors"] = perms;
    out["word"] = word;
    emit(out);
    return kOk;
  }
  std::cout << "delta^" << nf.deltaPower;
  for (const auto& p : perms) {
    std::cout << " [";
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
    std::cout << ']';
  }
  std::cout << '\n' << word << '\n';
  return kOk;
}

int runCocycleCheck(const std::string& groupText, const std::vector<std::string>& flips, bool json) {
  const FixtureSpec spec = parseFixture(groupText, false);
  ordlib::CyclicGroup g(spec.parameter);
  ordlib::CocycleTable<ordlib::CyclicGroup> table(g, ordlib::CarryCocycle{spec.parameter});
  for (const auto& f : flips) {
    int a = 0;
    int b = 0;
    char comma = 0;
    std::istringstream in(f);
    if (!(in >> a >> comma >> b) || comma != ',' || !in.eof() || a < 0 || b < 0 || a >= g.modulus() || b >= g.modulus()) {
      throw UsageError("--flip expects a,b with 0 <= a,b < " + std::to_string(g.order()));
    }
    table.set(a, b, 1 - table(a, b));
  }
  const auto violations = ordlib::checkCocycle(g, table, g.elements());
  if (json) {
    Json out = document();
    out["group"] = groupText;
    out["violations"] = Json::array();
    for (const auto& v : violations) out["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    emit(out);
    return kOk;
  }
  std::cout << groupText << ": " << violations.size() << " violations\n";
  for (const auto& v : violations) {
    std::cout << "axiom " << (v.axiom == 0 ? std::string("values") : std::to_string(v.axiom)) << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? "," : "") << v.witness[i];
    std::cout << ")\n";
  }
  return kOk;
}

// {"strands": n, "z": WORD (default Delta2), "entries": [{"element": WORD, "n": int, "m": int}, ...]}
int runCert(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw SpecFileError("cannot read " + path);
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecFileError(path + ": " + e.what());
  }
  int strands = 0;
  std::string zText;
  std::vector<ordlib::RootEntry<BraidWord>> entries;
  std::vector<std::string> texts;
  try {
    strands = spec.at("strands").get<int>();
    zText = spec.value("z", std::string("Delta2"));
    for (const auto& e : spec.at("entries")) {
      texts.push_back(e.at("element").get<std::string>());
      entries.push_back(
          {ordlib::cli::parseBraid(texts.back(), strands), e.at("n").get<std::int64_t>(), e.at("m").get<std::int64_t>()});
    }
  } catch (const Json::exception& e) {
    throw SpecFileError(path + ": " + e.what());
  }
  const ordlib::RootCertificate<BraidWord> cert{std::move(entries), ordlib::cli::parseBraid(zText, strands)};
  ordlib::braid::BraidGroup group(strands);
  const auto result = ordlib::verifyRootCertificate(group, cert);
  if (json) {
    Json out = document();
    out["verified"] = result.verified;
    if (result.witness) out["witness"] = *result.witness;
    emit(out);
  } else if (result.verified) {
    std::cout << "verified " << cert.entries.size() << " identities\n";
  } else {
    const auto& e = cert.entries[*result.witness];
    std::cout << "refuted at entry " << *result.witness << ": (" << texts[*result.witness] << ")^" << e.n
              << " != z^" << e.m << '\n';
  }
  return kOk;
}

int runPinpoint(const WordArgs& a, const std::string& conj, int n, bool json) {
  if (n < 1) throw UsageError("--power must be >= 1");
  const BraidWord w = ordlib::cli::parseBraid(a.word, a.strands);
  const BraidWord f = ordlib::cli::parseBraid(conj, a.strands);
  const auto r = ordlib::conjugateFloorPinpoint(w, f, n, budgetFromEnvironment());
  if (json) {
    Json out = document();
    out["k"] = r.k;
    out["kPrime"] = r.kPrime;
    out["n"] = r.n;
    out["value"] = r.value ? toJson(*r.value) : Json("Unknown");
    emit(out);
  } else {
    std::cout << "k " << r.k << "\nk' " << r.kPrime << "\nvalue " << (r.value ? ordlib::toString(*r.value) : "Unknown")
              << '\n';
  }
  return kOk;
}

template <class G, class Name>
Json realizationJson(const G& group, const std::vector<ordlib::ElementOf<G>>& generators,
                     const ordlib::ElementOf<G>& z, int radius, const std::string& groupText, Name name) {
  const auto budget = budgetFromEnvironment();
  const auto ball = ordlib::ballOf(group, generators, radius);
  const auto table = ordlib::tightEmbedBall(group, ball, std::optional(z), budget.floor);
  const auto action = ordlib::buildPartialAction(table, generators);
  Json out = document();
  out["group"] = groupText;
  out["radius"] = radius;
  out["knots"] = Json::array();
  for (const auto& p : table.points()) out["knots"].push_back({{"element", name(p.element)}, {"coord", toJson(p.coord)}});
  out["maps"] = Json::array();
  for (const auto& m : action.maps()) {
    Json knots = Json::array();
    for (const auto& [x, y] : m.knots) knots.push_back({toJson(x), toJson(y)});
    out["maps"].push_back({{"actor", name(m.actor)}, {"knots", knots}});
  }
  return out;
}

int runRealize(const std::string& groupText, int radius, const std::string& exportPath) {
  if (radius < 0) throw UsageError("--radius must be >= 0");
  const FixtureSpec spec = parseFixture(groupText, true);
  Json out;
  switch (spec.kind) {
    case FixtureSpec::Kind::Integers: {
      ordlib::IntegerGroup g;
      out = realizationJson(g, {std::int64_t{1}, std::int64_t{-1}}, std::int64_t{1}, radius, groupText,
                            [](std::int64_t v) { return std::to_string(v); });
      break;
    }
    case FixtureSpec::Kind::CyclicLift: {
      const int n = spec.parameter;
      ordlib::LiftGroup lift(ordlib::CyclicGroup(n), ordlib::CarryCocycle{n});
      const auto one = lift.lift(1 % n, 0);
      out = realizationJson(lift, {one, lift.inverse(one), lift.z(), lift.inverse(lift.z())}, lift.z(), radius,
                            groupText, [](const ordlib::Lifted<int>& v) {
                              return "(" + std::to_string(v.base) + "," + std::to_string(v.height) + ")";
                            });
      break;
    }
    case FixtureSpec::Kind::Braid: {
      ordlib::braid::BraidGroup g(spec.parameter, budgetFromEnvironment().lengthFactor);
      out = realizationJson(g, g.generatorsAndInverses(), g.fullTwist(), radius, groupText,
                            [](const BraidWord& w) { return ordlib::braid::toString(w); });
      break;
    }
  }
  if (exportPath.empty()) {
    emit(out);
    return kOk;
  }
  std::ofstream file(exportPath);
  if (!file) throw UsageError("cannot write " + exportPath);
  file << out.dump(2) << '\n';
  std::cout << "wrote " << out["knots"].size() << " knots and " << out["maps"].size() << " maps to " << exportPath
            << '\n';
  return kOk;
}

int runAbel(const WordArgs& a, int N, bool json) {
  if (N < 1) throw UsageError("--N must be >= 1");
  const BraidWord w = ordlib::cli::parseBraid(a.word, a.strands);
  const std::int64_t e = ordlib::abelianizationTranslation(w);
  const auto r = ordlib::fdtcBounds(w, N, budgetFromEnvironment());
  if (json) {
    Json out = document();
    out["strands"] = a.strands;
    out["word"] = a.word;
    out["e"] = e;
    out["N"] = N;
    out["bounds"] = toJson(r.bounds);
    emit(out);
  } else {
    std::cout << "e = " << e << "\nfdtc bounds " << r.bounds << " (N=" << N << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orderings, floors and fractional Dehn twist coefficients of braids."};
  app.require_subcommand(1);
  std::function<int()> action;
  bool json = false;

  auto addWord = [](CLI::App* sub, WordArgs& a) {
    sub->add_option("--strands", a.strands, "number of strands")->required()->check(CLI::Range(2, 64));
    sub->add_option("--word", a.word, "braid word, e.g. \"(s1 s2)^3 s1^-1\"")->required();
  };

  WordArgs fdtcArgs;
  int fdtcN = ordlib::kDefaultFdtcN;
  std::int64_t maxDen = ordlib::kDefaultMaxDenominator;
  auto* fdtc = app.add_subcommand("fdtc", "bounds and exact value of the fractional Dehn twist coefficient");
  addWord(fdtc, fdtcArgs);
  fdtc->add_option("-N,--N", fdtcN, "number of powers")->capture_default_str();
  fdtc->add_option("--max-den", maxDen, "largest denominator tried")->capture_default_str();
  fdtc->add_flag("--json", json);
  fdtc->callback([&] { action = [&] { return runFdtc(fdtcArgs, fdtcN, maxDen, json); }; });

  WordArgs floorArgs;
  auto* floor = app.add_subcommand("floor", "the floor [W] against Delta^2");
  addWord(floor, floorArgs);
  floor->add_flag("--json", json);
  floor->callback([&] { action = [&] { return runFloor(floorArgs, json); }; });

  int cmpStrands = 0;
  std::string left;
  std::string right;
  auto* cmp = app.add_subcommand("compare", "Dehornoy comparison: prints <, = or >");
  cmp->add_option("--strands", cmpStrands)->required()->check(CLI::Range(2, 64));
  cmp->add_option("--left", left)->required();
  cmp->add_option("--right", right)->required();
  cmp->add_flag("--json", json);
  cmp->callback([&] { action = [&] { return runCompare(cmpStrands, left, right, json); }; });

  WordArgs nfArgs;
  auto* nf = app.add_subcommand("nf", "Garside left normal form");
  addWord(nf, nfArgs);
  nf->add_flag("--json", json);
  nf->callback([&] { action = [&] { return runNormalForm(nfArgs, json); }; });

  std::string cocycleGroup;
  std::vector<std::string> flips;
  auto* cocycle = app.add_subcommand("cocycle-check", "exhaustive circular cocycle axiom check");
  cocycle->add_option("--group", cocycleGroup, "zmod:<n>")->required();
  cocycle->add_option("--flip", flips, "flip the table entry a,b before checking");
  cocycle->add_flag("--json", json);
  cocycle->callback([&] { action = [&] { return runCocycleCheck(cocycleGroup, flips, json); }; });

  std::string certPath;
  auto* cert = app.add_subcommand("cert", "verify a root certificate g^n = z^m");
  cert->add_option("--spec", certPath, "certificate JSON file")->required();
  cert->add_flag("--json", json);
  cert->callback([&] { action = [&] { return runCert(certPath, json); }; });

  WordArgs pinArgs;
  std::string conj;
  int pinPower = 1;
  auto* pin = app.add_subcommand("pinpoint", "compare [W^k] with [F W^k F^-1]");
  addWord(pin, pinArgs);
  pin->add_option("--conj", conj, "conjugating word F")->required();
  pin->add_option("--power", pinPower, "k")->required();
  pin->add_flag("--json", json);
  pin->callback([&] { action = [&] { return runPinpoint(pinArgs, conj, pinPower, json); }; });

  std::string realizeGroup;
  int radius = 0;
  std::string exportPath;
  auto* realize = app.add_subcommand("realize", "tight embedding of a ball and its partial action");
  realize->add_option("--group", realizeGroup, "z, zmod:<n> (lift of Z/n) or braid:<n>")->required();
  realize->add_option("--radius", radius)->required();
  realize->add_option("--export", exportPath, "write JSON here instead of stdout");
  realize->callback([&] { action = [&] { return runRealize(realizeGroup, radius, exportPath); }; });

  WordArgs abelArgs;
  int abelN = ordlib::kDefaultFdtcN;
  auto* abel = app.add_subcommand("abel", "exponent-sum translation next to the fdtc bounds");
  addWord(abel, abelArgs);
  abel->add_option("-N,--N", abelN, "number of powers")->capture_default_str();
  abel->add_flag("--json", json);
  abel->callback([&] { action = [&] { return runAbel(abelArgs, abelN, json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ordlib::cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SpecFileError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ordlib::ZeroExponent& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ordlib::InvalidBraid& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ordlib::ResourceLimitError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const ordlib::InsufficientKnots& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const ordlib::AmbiguousReconstruction& e) {
    std::cerr << e.what() << '\n';
    return kAmbiguous;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
