#include <algorithm>
#include <string>
#include <sstream>

#include "doctest.h"
#include "sphclass/catalog.hpp"
#include "sphclass/classifier.hpp"
#include "sphclass/errors.hpp"

using namespace sphclass;
using namespace sphclass::catalog;

namespace {

bool cites(const Verdict& v, std::string_view id) {
  return std::any_of(v.matches.begin(), v.matches.end(),
                     [&](const Match& m) { return m.entry && m.entry->id == id; });
}

bool has_row(std::string_view table, std::string_view H, std::string_view G, std::string_view chr) {
  for (const Entry* e : dataset().table(table))
    if (e->H == H && e->G == G && e->chr == chr) return true;
  return false;
}

}  // namespace

TEST_CASE("embedded dataset loads and verifies") {
  const auto& ds = dataset();
  CHECK(ds.version == 1);
  CHECK(ds.checksum == compute_checksum(embedded_text()));
  CHECK(ds.footnotes.size() == 5);
  CHECK(load_tables().size() == ds.entries.size());
}

TEST_CASE("dataset contents") {
  CHECK(has_row("classical", "G2xSp(2)", "Sp(8)", "p=2"));
  CHECK(has_row("exceptional", "At2", "G2", "p=3"));
  CHECK(has_row("exceptional", "C4", "F4", "p=2"));
  const Entry* l02 = nullptr;
  for (const Entry* e : dataset().table("non-gcr-levi"))
    if (e->H == "Sp(2n)" && e->G == "SL(2n+1)") l02 = e;
  REQUIRE(l02);
  CHECK(l02->extra.at("U") == "k^2n");
  CHECK(h1gen(*l02, {{'n', 3}}) == "k");
  CHECK(dataset().table("non-gcr-levi").size() == 4);
}

TEST_CASE("checksum covers records but not comments") {
  const std::string text(embedded_text());
  CHECK_NOTHROW(load_dataset(text + "\n# trailing comment\n\n"));
  std::string tampered = text;
  const auto pos = tampered.find("n>=2");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 4, "n>=3");
  CHECK_THROWS_AS(load_dataset(tampered), DatasetIntegrityError);
  std::string no_sum = text;
  no_sum.replace(no_sum.find("@checksum"), 9, "# removed");
  CHECK_THROWS_AS(load_dataset(no_sum), DatasetIntegrityError);
}

TEST_CASE("malformed records are rejected") {
  auto with_record = [](const std::string& record) {
    std::string text = "@version 1\n" + record + "\n";
    std::ostringstream sum;
    sum << std::hex << compute_checksum(text);
    return text + "@checksum " + sum.str() + "\n";
  };
  CHECK_NOTHROW(load_dataset(with_record("id=X1 | table=classical | H=SL(n) | G=SL(n+1) | where=n>=1")));
  CHECK_THROWS_AS(load_dataset(with_record("id=X1 | table=nowhere | H=SL(n) | G=SL(n+1)")), DatasetIntegrityError);
  CHECK_THROWS_AS(load_dataset(with_record("id=X1 | table=classical | H=SL(n) | G=SL(n+1) | where=n>>1")),
                  DatasetIntegrityError);
  CHECK_THROWS_AS(load_dataset(with_record("id=X1 | table=classical | H=SL(n")), DatasetIntegrityError);
}

TEST_CASE("pattern instantiation") {
  CHECK(instantiate_pattern("SGL(m,n)", {{'m', 4}, {'n', 3}})->to_string() == "SGL(4,3)");
  CHECK(instantiate_pattern("GmxSp(2n-2)", {{'n', 3}})->to_string() == "GmxSp(4)");
  CHECK_FALSE(instantiate_pattern("Sp(2n-2)", {{'n', 0}}).has_value());
  CHECK_FALSE(instantiate_pattern("Sp(n)", {{'n', 3}}).has_value());
  CHECK(instantiate_pattern("DeltaSL2(q=q)", {{'q', 9}})->to_string() == "DeltaSL2(q=9)");
}

TEST_CASE("query examples") {
  const auto a = query("G2xSp(2)", "Sp(8)", 2);
  CHECK(a.status == Status::Spherical);
  CHECK(cites(a, "C23"));
  CHECK(query("G2xSp(2)", "Sp(8)", 0).status == Status::NotListed);
  CHECK(query("G2xSp(2)", "Sp(8)", 3).status == Status::NotListed);

  const auto b = query("SGL(4,3)", "SL(7)", 5);
  REQUIRE(b.status == Status::Spherical);
  CHECK(b.primary()->entry->id == "C02");
  CHECK(b.primary()->bindings == Bindings{{'m', 4}, {'n', 3}});

  const auto c = query("DeltaSL2(q=4)", "SO(4)", 2);
  REQUIRE(c.status == Status::Spherical);
  CHECK(c.primary()->entry->id == "C26");
  CHECK(c.primary()->conjugacy_classes == 2);
  CHECK(query("DeltaSL2(q=4)", "SO(4)", 3).status == Status::NotListed);
  CHECK(query("DeltaSL2(q=9)", "SO(4)", 3).status == Status::Spherical);

  const auto d = query("SO(3)xSO(5)", "SO(7)", 2);
  CHECK(d.status == Status::Spherical);
  CHECK(cites(d, "C20"));
  CHECK_FALSE(d.isogeny_trace.empty());

  CHECK(query("C4", "E6", 0).status == Status::Spherical);
  CHECK(query("At2", "G2", 3).status == Status::Spherical);
  CHECK(query("At2", "G2", 0).status == Status::NotListed);
  CHECK(query("A2", "G2", 0).status == Status::Spherical);
}

TEST_CASE("query isogeny bookkeeping") {
  const auto v = query("Spin(7)", "SO(9)", 2);
  REQUIRE(v.status == Status::Spherical);
  CHECK(cites(v, "C18"));
  CHECK(cites(v, "C24"));
  CHECK(v.primary()->entry->id == "C18");
  CHECK_FALSE(v.primary()->via_isogeny);
  CHECK(std::find(v.isogeny_trace.begin(), v.isogeny_trace.end(), "G SO(9)->Sp(8)") != v.isogeny_trace.end());
}

TEST_CASE("footnote metadata") {
  CHECK(query("Spin(7)", "SO(8)", 0).primary()->conjugacy_classes == 2);
  CHECK(query("Sp(4)(x)Sp(2)", "SO(8)", 0).primary()->conjugacy_classes == 2);
  CHECK(query("GL(4)", "SO(8)", 0).primary()->conjugacy_classes == 2);
  CHECK(query("GL(5)", "SO(10)", 0).primary()->conjugacy_classes == 1);
  CHECK(query("SO(5)", "SL(5)", 2).primary()->conjugacy_classes == 2);
  CHECK(query("SO(5)", "SL(5)", 3).primary()->conjugacy_classes == 1);
  const auto notes = query("Spin(7)", "SO(8)", 0).primary()->notes;
  CHECK(std::any_of(notes.begin(), notes.end(), [](const std::string& n) { return n.find("SO(7)") != n.npos; }));
}

TEST_CASE("tensor products only match tensor rows") {
  CHECK(query("Sp(4)(x)Sp(2)", "SO(8)", 0).status == Status::Spherical);
  CHECK(query("Sp(4)xSp(2)", "SO(8)", 0).status == Status::NotListed);
}

TEST_CASE("scope") {
  CHECK(query("SL(2)", "SL(2)xSL(2)", 0).status == Status::OutOfScope);
  CHECK(query("Gm", "SO(1)", 0).status == Status::OutOfScope);
  CHECK(query("SL(2)", "SL(2)", 0).status == Status::Spherical);
  CHECK(query("Gm", "SO(2)", 0).status == Status::Spherical);
  CHECK(query("B3", "E7", 0).status == Status::NotListed);
  CHECK_THROWS_AS(query("B3", "SO(8)", 0), AmbiguousDescriptor);
  CHECK_THROWS_AS(query("SL(2)", "SL(3)", 4), std::invalid_argument);
  const auto n = query("Spin(7)xSp(2)", "Sp(10)", 2);
  CHECK(n.status == Status::NotListed);
  CHECK_FALSE(n.caveat.empty());
}

TEST_CASE("characteristic gating for p = 2 rows") {
  for (const Entry* e : dataset().table("classical")) {
    if (e->chr != "p=2") continue;
    for (const auto& inst : instances(*e, 8)) {
      for (long long p : {0, 3, 5}) {
        const auto v = query(inst.H, inst.G, p);
        CHECK_FALSE(cites(v, e->id));
      }
    }
  }
}

TEST_CASE("maximal G-cr listings") {
  auto ids = [](const std::vector<Listing>& ls, bool applicable_only) {
    std::vector<std::string> out;
    for (const auto& l : ls)
      if (!applicable_only || l.applies) out.push_back(l.entry->id + ":" + l.H_instance);
    return out;
  };
  const auto so8 = ids(list_maximal_gcr(groups::parse("SO(8)"), 2), true);
  CHECK(std::find(so8.begin(), so8.end(), "M07:SO(7)") != so8.end());
  const auto f4 = list_maximal_gcr(groups::parse("F4"), 2);
  CHECK(ids(f4, true) == std::vector<std::string>{"M18:B4", "M19:C4"});
  CHECK(ids(f4, false).size() == 3);
  for (const auto& l : list_maximal_gcr(groups::parse("Sp(8)"), 2))
    if (l.entry->id == "M03") CHECK_FALSE(l.applies);
  CHECK_THROWS_AS(list_maximal_gcr(groups::parse("SO(9)"), 2), OutOfScope);
  CHECK_THROWS_AS(list_maximal_gcr(groups::parse("SL(2)xSL(2)"), 0), OutOfScope);
  const auto e6 = ids(list_nonmaximal_gcr(groups::parse("E6"), 0), true);
  CHECK(e6 == std::vector<std::string>{"S01:D5"});
}

TEST_CASE("non-G-cr classes") {
  const auto cases = non_gcr_cases();
  REQUIRE(cases.size() == 2);
  for (const auto& c : cases) {
    CHECK(c.entry->H == "SO(2n+1)");
    CHECK(c.entry->G == "SL(2n+1)");
    REQUIRE(c.levi);
    CHECK(c.levi->H == "Sp(2n)");
    CHECK(h1gen(*c.levi, {{'n', 1}}) == "k");
  }
  CHECK(cases[0].entry->extra.at("variant") != cases[1].entry->extra.at("variant"));
  CHECK(satisfies(*cases[0].entry, {{'n', 1}, {'p', 2}}, true));
  const Entry* d5 = dataset().find("L04");
  CHECK(h1gen(*d5, {}) == "0");
  const Entry* l01 = dataset().find("L01");
  CHECK(h1gen(*l01, {{'m', 2}, {'n', 1}}) == "k");
  CHECK(h1gen(*l01, {{'m', 3}, {'n', 1}}) == "0");
}

TEST_CASE("table dumps honor characteristic gating") {
  for (const Entry* e : table_rows("classical", 0)) CHECK(e->side == "all");
  const auto p3 = table_rows("exceptional", 3);
  CHECK(std::any_of(p3.begin(), p3.end(), [](const Entry* e) { return e->H == "At2"; }));
  CHECK(table_rows("classical", std::nullopt).size() == dataset().table("classical").size());
}

TEST_CASE("consistency audit is clean") {
  for (const auto& r : consistency_audit(12)) {
    CAPTURE(r.claim_id);
    CHECK(r.verdict == report::Status::Reproduced);
  }
}
