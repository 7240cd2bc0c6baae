#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "bwf2/element.hpp"
#include "bwf2/endo.hpp"
#include "bwf2/json_io.hpp"
#include "bwf2/verify.hpp"
#include "bwf2/window_map.hpp"

namespace {

using bwf2::Element;
using bwf2::Family;
using bwf2::Nat;

std::vector<Nat> parse_tail_list(const std::string& text) {
  std::vector<Nat> tails;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      const std::string piece = text.substr(start, i - start);
      start = i + 1;
      std::size_t pos = 0;
      while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
      std::size_t end = piece.size();
      while (end > pos && std::isspace(static_cast<unsigned char>(piece[end - 1]))) --end;
      const std::string token = piece.substr(pos, end - pos);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("tails must be comma-separated naturals");
      }
      tails.push_back(std::stoull(token));
    }
  }
  return tails;
}

Family parse_family_text(const std::string& text) {
  return Family(parse_tail_list(text));
}

void print_element(const Element& x, bool json) {
  if (json) {
    std::cout << bwf2::to_json(x).dump() << "\n";
  } else {
    std::cout << bwf2::format_element(x) << "\n";
  }
}

void print_bool(bool value, bool json) {
  if (json) {
    std::cout << nlohmann::json{{"result", value}}.dump() << "\n";
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
}

void print_endo(const bwf2::EndoNormalForm& e, bool json) {
  if (json) {
    std::cout << bwf2::to_json(e).dump() << "\n";
  } else {
    std::cout << bwf2::format_endo(e) << "\n";
  }
}

bwf2::GreenRelation parse_relation(const std::string& text) {
  if (text == "R") return bwf2::GreenRelation::R;
  if (text == "L") return bwf2::GreenRelation::L;
  if (text == "H") return bwf2::GreenRelation::H;
  throw std::invalid_argument("relation must be one of R, L, H");
}

int run_verify(bool json, Nat window) {
  const auto reports = bwf2::run_default_suite({window});
  std::uint64_t broken = 0;
  for (const auto& report : reports) {
    if (!report.ok()) ++broken;
    if (json) {
      std::cout << bwf2::to_json(report).dump() << "\n";
      continue;
    }
    if (report.ok()) {
      std::cout << "ok   " << report.law << "  checked=" << report.checked;
      if (report.skipped > 0) std::cout << " skipped=" << report.skipped;
      std::cout << "\n";
    } else {
      std::cout << "FAIL " << report.law << "  checked=" << report.checked
                << " violations=" << report.violation_total << "\n";
      const std::size_t shown = std::min<std::size_t>(report.violations.size(), 3);
      for (std::size_t i = 0; i < shown; ++i) {
        std::cout << "     " << report.violations[i] << "\n";
      }
    }
  }
  if (!json) {
    if (broken == 0) {
      std::cout << "all laws hold\n";
    } else {
      std::cout << broken << " law(s) violated\n";
    }
  }
  return broken == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and endomorphism calculus for the bicyclic "
               "extension over the two-tail family {[0), [1)}"};
  app.require_subcommand(1);
  int rc = 0;

  // element arithmetic ------------------------------------------------------
  struct {
    std::string x, y, family = "0,1", relation;
    bool json = false;
  } elem;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", elem.family,
                    "Family tails as comma-separated indices (default 0,1)");
    cmd->add_flag("--json", elem.json, "Emit JSON");
  };

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("x", elem.x, "Left factor, e.g. \"(2,1,[0))\"")->required();
  mul->add_option("y", elem.y, "Right factor")->required();
  add_family(mul);
  mul->callback([&] {
    const Family fam = parse_family_text(elem.family);
    const Element x = bwf2::parse_element(elem.x, fam);
    const Element y = bwf2::parse_element(elem.y, fam);
    print_element(bwf2::multiply(x, y, fam), elem.json);
  });

  auto* inv = app.add_subcommand("inv", "Inverse of an element");
  inv->add_option("x", elem.x, "Element")->required();
  add_family(inv);
  inv->callback([&] {
    const Family fam = parse_family_text(elem.family);
    print_element(bwf2::inverse(bwf2::parse_element(elem.x, fam)), elem.json);
  });

  auto* idem = app.add_subcommand("idem", "Is the element idempotent?");
  idem->add_option("x", elem.x, "Element")->required();
  add_family(idem);
  idem->callback([&] {
    const Family fam = parse_family_text(elem.family);
    print_bool(bwf2::is_idempotent(bwf2::parse_element(elem.x, fam)), elem.json);
  });

  auto* leq = app.add_subcommand("leq", "Natural partial order x ≼ y");
  leq->add_option("x", elem.x, "Smaller candidate")->required();
  leq->add_option("y", elem.y, "Larger candidate")->required();
  add_family(leq);
  leq->callback([&] {
    const Family fam = parse_family_text(elem.family);
    print_bool(bwf2::natural_leq(bwf2::parse_element(elem.x, fam),
                                 bwf2::parse_element(elem.y, fam)),
               elem.json);
  });

  auto* green = app.add_subcommand("green", "Green relation R, L or H");
  green->add_option("relation", elem.relation, "R, L or H")->required();
  green->add_option("x", elem.x, "Element")->required();
  green->add_option("y", elem.y, "Element")->required();
  add_family(green);
  green->callback([&] {
    const Family fam = parse_family_text(elem.family);
    print_bool(bwf2::green_related(bwf2::parse_element(elem.x, fam),
                                   bwf2::parse_element(elem.y, fam),
                                   parse_relation(elem.relation)),
               elem.json);
  });

  // endomorphism calculus ---------------------------------------------------
  struct {
    std::string expr, x, map_path;
    std::vector<std::string> exprs;
    bool json = false;
  } endo;

  auto* endo_apply = app.add_subcommand("endo-apply", "Apply an endomorphism");
  endo_apply->add_option("--expr", endo.expr, "Endomorphism expression")->required();
  endo_apply->add_option("x", endo.x, "Element over the two-tail family")->required();
  endo_apply->add_flag("--json", endo.json, "Emit JSON");
  endo_apply->callback([&] {
    const auto e = bwf2::parse_endo_expression(endo.expr);
    print_element(bwf2::apply(e, bwf2::parse_element(endo.x)), endo.json);
  });

  auto* endo_compose = app.add_subcommand("endo-compose",
                                          "Compose endomorphisms left to right");
  endo_compose->add_option("--expr", endo.exprs, "Expressions, applied in order")
      ->required()
      ->expected(1, -1);
  endo_compose->add_flag("--json", endo.json, "Emit JSON");
  endo_compose->callback([&] {
    auto e = bwf2::parse_endo_expression(endo.exprs.front());
    for (std::size_t i = 1; i < endo.exprs.size(); ++i) {
      e = bwf2::compose(e, bwf2::parse_endo_expression(endo.exprs[i]));
    }
    print_endo(e, endo.json);
  });

  auto* endo_factor = app.add_subcommand(
      "endo-factor", "Normal form and unit-image data of an endomorphism");
  endo_factor->add_option("--expr", endo.expr, "Endomorphism expression")->required();
  endo_factor->add_flag("--json", endo.json, "Emit JSON");
  endo_factor->callback([&] {
    const auto e = bwf2::parse_endo_expression(endo.expr);
    const auto refactored =
        bwf2::factor([&](const Element& x) { return bwf2::apply(e, x); });
    const Nat s = refactored.power() / 2;
    const Nat p = refactored.power() % 2;
    if (endo.json) {
      auto j = bwf2::to_json(refactored);
      j["s"] = s;
      j["p"] = p;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << bwf2::format_endo(refactored) << "\n";
      std::cout << "s=" << s << " p=" << p << " n=" << refactored.power() << "\n";
    }
  });

  auto* endo_classify = app.add_subcommand(
      "endo-classify", "Classify a sampled window map from a JSON file");
  endo_classify->add_option("--map", endo.map_path, "Path to the window file")
      ->required();
  endo_classify->add_flag("--json", endo.json, "Emit JSON");
  endo_classify->callback([&] {
    std::ifstream in(endo.map_path);
    if (!in) {
      throw std::invalid_argument("cannot open " + endo.map_path);
    }
    nlohmann::json j;
    in >> j;
    const auto m = bwf2::window_map_from_json(j);
    print_endo(bwf2::classify_window(m), endo.json);
  });

  // families and verification -----------------------------------------------
  struct {
    std::string tails;
    bool json = false;
    Nat window = 6;
  } chk;

  auto* family_check = app.add_subcommand("family-check",
                                          "Check omega-closure of a tail set");
  family_check->add_option("tails", chk.tails, "Comma-separated tail indices")
      ->required();
  family_check->add_flag("--json", chk.json, "Emit JSON");
  family_check->callback([&] {
    const auto witness = bwf2::family_closure_witness(parse_tail_list(chk.tails));
    if (chk.json) {
      nlohmann::json j{{"closed", !witness.has_value()}};
      if (witness) {
        j["witness"] = {{"a", witness->a},
                        {"b", witness->b},
                        {"n", witness->n},
                        {"produced", witness->produced}};
      }
      std::cout << j.dump() << "\n";
    } else if (witness) {
      std::cout << "not ω-closed: witness [" << witness->a << ")∩(-"
                << witness->n << "+[" << witness->b << ")) = ["
                << witness->produced << ")\n";
    } else {
      std::cout << "ω-closed\n";
    }
    if (witness) rc = 1;
  });

  auto* verify = app.add_subcommand("verify", "Run the full law suite");
  verify->add_flag("--json", chk.json, "One JSON object per law");
  verify->add_option("--window", chk.window, "Element window bound (<= 8)")
      ->check(CLI::Range(Nat{1}, Nat{8}));
  verify->callback([&] { rc = run_verify(chk.json, chk.window); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
