#include "doctest.h"
#include "realmot/error.hpp"
#include "realmot/motivic.hpp"
#include "test_support.hpp"

using namespace realmot;
using testsupport::random_laurent;
using testsupport::uniform;

namespace {

Context sample_context() {
  Context ctx;
  auto gen = [](std::string name, int dim, std::string base, bool proper, bool ns, bool compact,
                std::optional<std::string> beta = std::nullopt) {
    Generator g;
    g.name = std::move(name);
    g.dim = dim;
    g.base = std::move(base);
    g.proper = proper;
    g.nonsingular = ns;
    g.compact = compact;
    if (beta) g.beta = LaurentPoly::parse(*beta);
    return g;
  };
  ctx.add_generator(gen("E1", 1, "X0", true, true, true, "u+1"));
  ctx.add_generator(gen("E2", 1, "X0", true, true, true, "u+1"));
  ctx.add_generator(gen("E12", 0, "X0", true, true, true, "2"));
  ctx.add_generator(gen("C2", 2, "X0", true, true, true));
  ctx.add_generator(gen("oval", 1, "pt", true, true, true, "u+1"));
  ctx.add_generator(gen("open", 1, "X0", false, true, false));
  ctx.add_generator(gen("Y", 1, "S", true, true, true, "u+1"));
  ctx.add_generator(gen("Ynp", 1, "S", false, true, false));
  Generator e1o = gen("E1o", 1, "X0", false, true, false, "u-1");
  e1o.equals = "[E1] - [E12]";
  ctx.add_generator(e1o);
  ctx.add_morphism({"X0", "pt", true});
  ctx.add_morphism({"S", "T", false});
  return ctx;
}

}  // namespace

TEST_CASE("class combine") {
  Context ctx = sample_context();
  auto c = [&](const char* s) { return ctx.parse(s); };
  CHECK((c("[E1] + [E2]") - c("[E2]")) == c("[E1]"));
  MotivicClass x = c("L-1") * c("[E12]");
  CHECK(x.terms().size() == 1);
  CHECK(x.coeff_of("E12") == LaurentPoly::parse("u-1"));
  CHECK(x.base() == "X0");
  try {
    (void)(c("[E1]") * c("[E2]"));
    FAIL("expected UnrepresentableProduct");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnrepresentableProduct);
  }
  try {
    (void)(c("[E1]") + c("[oval]"));
    FAIL("expected BaseMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BaseMismatch);
  }
  CHECK((c("[E1]") - c("[E1]")).is_zero());
}

TEST_CASE("class expression parser") {
  Context ctx = sample_context();
  CHECK(ctx.parse("2*L - 2") == MotivicClass::scalar(LaurentPoly::parse("2u-2")));
  MotivicClass psi = ctx.parse("[E1] + [E2] - (L+1)*[E12]");
  CHECK(psi.coeff_of("E12") == LaurentPoly::parse("-u-1"));
  CHECK(psi.to_string() == "[E1] - (L + 1)*[E12] + [E2]");
  CHECK(ctx.parse(psi.to_string()) == psi);
  CHECK(ctx.parse("(L-1)[E12]") == ctx.parse("(L-1)*[E12]"));
  CHECK(ctx.parse("0", "X0").is_zero());
  CHECK_THROWS_AS(ctx.parse("[nope]"), Error);
  CHECK_THROWS_AS(ctx.parse("[E1]^2"), Error);
  CHECK_THROWS_AS(ctx.parse("2*"), Error);
}

TEST_CASE("beta realization") {
  Context ctx = sample_context();
  CHECK(*beta_realize(ctx.parse("L+1")).value == LaurentPoly::parse("u+1"));
  CHECK(*beta_realize(ctx.parse("2*[oval]")).value == LaurentPoly::parse("2u+2"));
  auto r = beta_realize(ctx.parse("[C2] + [E1]"));
  CHECK(!r.known());
  CHECK(r.unknown == std::vector<std::string>{"C2"});
  CHECK(*beta_realize(ctx.parse("[E1] + [E2] - (L+1)*[E12]")).value == LaurentPoly(0));
}

TEST_CASE("duality and link on classes") {
  Context ctx = sample_context();
  CHECK(dual_class(ctx.parse("L+1")) == ctx.parse("L^-1+1"));
  CHECK(dual_class(ctx.parse("[E1]")) == ctx.parse("L^-1*[E1]"));
  CHECK(dual_class(ctx.parse("L^2*[C2]")) == ctx.parse("L^-4*[C2]"));
  CHECK(link_relative(ctx.parse("[E1]")) == ctx.parse("2*[E1]"));
  CHECK(link_relative(ctx.parse("[C2]")) == ctx.parse("(1+L^-1)*[C2]"));
  CHECK(link_relative(ctx.parse("1")) == ctx.parse("1+L"));
  try {
    dual_class(ctx.parse("[E1] + [open]"));
    FAIL("expected DualityUndefined");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DualityUndefined);
    CHECK(std::string(e.what()).find("open") != std::string::npos);
  }
}

TEST_CASE("euler parity") {
  Context ctx = sample_context();
  CHECK(euler_parity_check(link_relative(ctx.parse("[E1]"))));
  CHECK(euler_parity_check(link_relative(ctx.parse("[C2]"))));
  CHECK_FALSE(euler_parity_check(ctx.parse("[E1]")));
}

TEST_CASE("pushforward") {
  Context ctx = sample_context();
  MotivicClass x = ctx.parse("[E1] - 2*[E12]");
  MotivicClass p = pushforward_class(x, ctx, "pt", PushMode::Shriek);
  CHECK(p.base() == "pt");
  CHECK(*beta_realize(p).value == LaurentPoly::parse("u-3"));
  CHECK(p.terms().at("E1").gen->compact);
  CHECK(pushforward_class(ctx.parse("L"), ctx, "pt", PushMode::Star) == ctx.parse("L"));
  CHECK_THROWS_AS(pushforward_class(x, ctx, "Q", PushMode::Shriek), Error);
  try {
    pushforward_class(ctx.parse("[Y]"), ctx, "T", PushMode::Shriek);
    FAIL("expected PropernessLost");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PropernessLost);
  }
  CHECK(pushforward_class(ctx.parse("[Ynp]"), ctx, "T", PushMode::Shriek).base() == "T");
  // star mode equals D f_! D for proper maps
  MotivicClass s = pushforward_class(x, ctx, "pt", PushMode::Star);
  CHECK(s == p);
}

TEST_CASE("generator definitions expand") {
  Context ctx = sample_context();
  MotivicClass x = ctx.parse("[E1o] + [E12]");
  CHECK(ctx.expand(x) == ctx.parse("[E1]"));
  CHECK(*beta_realize(x).value == LaurentPoly::parse("u+1"));
}

TEST_CASE("operator identities on random classes") {
  Context ctx = sample_context();
  const char* names[] = {"E1", "E2", "E12", "C2"};
  for (int i = 0; i < 200; ++i) {
    MotivicClass x("X0");
    for (const char* n : names)
      if (uniform(0, 1)) x.add_term(ctx.generator(n), random_laurent());
    auto LD = [&](const MotivicClass& y) { return dual_class(y).scaled(LaurentPoly::u()); };
    CHECK(dual_class(dual_class(x)) == x);
    CHECK(link_relative(link_relative(x)) == link_relative(x).scaled(2));
    CHECK(LD(link_relative(x)) == link_relative(x));
    CHECK(link_relative(LD(x)) == link_relative(x));
    CHECK(euler_parity_check(link_relative(x)));
    MotivicClass pushed_dual = pushforward_class(dual_class(x), ctx, "pt", PushMode::Shriek);
    MotivicClass dual_pushed = dual_class(pushforward_class(x, ctx, "pt", PushMode::Shriek));
    CHECK(pushed_dual == dual_pushed);
    MotivicClass fully("X0");
    for (const char* n : {"E1", "E2", "E12"})
      if (uniform(0, 1)) fully.add_term(ctx.generator(n), random_laurent());
    CHECK(*beta_realize(dual_class(fully)).value == beta_realize(fully).value->dual());
  }
}
