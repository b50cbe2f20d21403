#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "witt/field.hpp"

namespace witt {
namespace {

FieldRef q_sqrt2() { return parse_field("Q(sqrt(2))"); }
FieldRef f2t() { return parse_field("GF(2)(t)"); }
FieldRef f2t_eta() { return parse_field("GF(2)(t)(artin-schreier(t))"); }

TEST(Arithmetic, PrimeField) {
  FieldRef f = parse_field("GF(5)");
  EXPECT_EQ(f->from_int(2) * f->from_int(4), f->from_int(3));
  EXPECT_EQ(f->from_int(3).inverse(), f->from_int(2));
  EXPECT_EQ(-f->from_int(1), f->from_int(4));
}

TEST(Arithmetic, ConjugateProductInQSqrt2) {
  FieldRef k = q_sqrt2();
  EXPECT_EQ(parse_element(k, "3+eta") * parse_element(k, "3-eta"), k->from_int(7));
}

TEST(Arithmetic, ArtinSchreierRelation) {
  FieldRef k = f2t_eta();
  const Element eta = parse_element(k, "eta");
  EXPECT_EQ(eta * eta, parse_element(k, "t+eta"));
}

TEST(Arithmetic, Errors) {
  FieldRef f = parse_field("GF(7)");
  EXPECT_ANY_THROW(f->zero().inverse());
  EXPECT_ANY_THROW(f->one() / f->zero());
  EXPECT_ANY_THROW(f->one() + rationals()->one());
  EXPECT_ANY_THROW(parse_element(q_sqrt2(), "1/0"));
}

TEST(Descriptors, RoundTrip) {
  for (const char* d : {"Q", "GF(5)", "GF(3^2)", "GF(2^8)", "GF(2)(t)", "Q(sqrt(2))", "GF(3)(sqrt(2))",
                        "GF(2)(t)(artin-schreier(t))"}) {
    FieldRef f = parse_field(d);
    EXPECT_EQ(parse_field(f->descriptor()), f) << d;
  }
  EXPECT_ANY_THROW(parse_field("GF(9)"));
  EXPECT_ANY_THROW(parse_field("GF(3)(sqrt(1))"));  // 1 is a square
  EXPECT_ANY_THROW(parse_field("R"));
}

TEST(Squares, Examples) {
  EXPECT_FALSE(f2t()->sqrt(parse_element(f2t(), "t")).has_value());
  const auto r = f2t()->sqrt(parse_element(f2t(), "t^2+1"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, parse_element(f2t(), "t+1"));
  const auto s = square_root(parse_element(q_sqrt2(), "3+2*eta"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, parse_element(q_sqrt2(), "3+2*eta"));
  EXPECT_TRUE(*s == parse_element(q_sqrt2(), "1+eta") || *s == parse_element(q_sqrt2(), "-1-eta"));
  EXPECT_FALSE(square_root(parse_element(q_sqrt2(), "eta")).has_value());
}

TEST(Squares, WitnessesAreExact) {
  Rng rng(11);
  for (const char* d : {"Q", "GF(7)", "GF(2^5)", "GF(3)(sqrt(2))", "Q(sqrt(2))", "GF(2)(t)", "GF(5)(t)"}) {
    FieldRef f = parse_field(d);
    for (int i = 0; i < 60; ++i) {
      const Element a = f->random(rng);
      const Element sq = a * a;
      const auto r = f->sqrt(sq);
      ASSERT_TRUE(r.has_value()) << d << " " << sq.str();
      EXPECT_EQ(*r * *r, sq) << d;
      const auto b = f->sqrt(a);
      if (b) {
        EXPECT_EQ(*b * *b, a) << d;
      }
    }
  }
}

TEST(NormTrace, Examples) {
  FieldRef k = f2t_eta();
  EXPECT_EQ(norm(parse_element(k, "1+t^2+t*eta")), parse_element(f2t(), "1+t+t^4"));
  EXPECT_EQ(norm(parse_element(q_sqrt2(), "3+eta")), rationals()->from_int(7));
  EXPECT_EQ(trace(parse_element(k, "eta")), f2t()->one());
}

TEST(Functional, Examples) {
  EXPECT_TRUE(functional_s(q_sqrt2()->one()).is_zero());
  EXPECT_EQ(functional_s(parse_element(q_sqrt2(), "eta")), rationals()->one());
  EXPECT_EQ(functional_s(parse_element(f2t_eta(), "t+(1+t)*eta")), parse_element(f2t(), "1+t"));
}

TEST(Functional, KernelIsTheBaseField) {
  Rng rng(3);
  for (const char* d : {"Q(sqrt(2))", "GF(3)(sqrt(2))", "GF(2)(t)(artin-schreier(t))"}) {
    FieldRef k = parse_field(d);
    const auto& ext = *k->as_extension();
    for (int i = 0; i < 1000; ++i) {
      const Element a = i % 4 == 0 ? ext.embed(ext.base()->random(rng)) : k->random(rng);
      EXPECT_EQ(functional_s(a).is_zero(), ext.to_base(a).has_value()) << d << " " << a.str();
    }
  }
}

TEST(Conjugation, Properties) {
  Rng rng(5);
  for (const char* d : {"Q(sqrt(2))", "GF(3)(sqrt(2))", "GF(2^3)(artin-schreier(1))", "GF(2)(t)(artin-schreier(t))"}) {
    FieldRef k = parse_field(d);
    const auto& ext = *k->as_extension();
    for (int i = 0; i < 100; ++i) {
      const Element a = k->random(rng);
      const Element b = k->random(rng);
      const Element c = ext.base()->random(rng);
      EXPECT_EQ(conjugate(conjugate(a)), a);
      EXPECT_EQ(norm(a), norm(conjugate(a)));
      EXPECT_EQ(ext.embed(norm(a)), a * conjugate(a));
      EXPECT_EQ(trace(a + b), trace(a) + trace(b));
      EXPECT_EQ(trace(ext.embed(c) * a), c * trace(a));
      EXPECT_EQ(functional_s(ext.embed(c) * a + b), c * functional_s(a) + functional_s(b));
    }
  }
}

TEST(WpMembership, Examples) {
  EXPECT_EQ(wp_membership(parse_field("GF(2)")->one()).decision, Decision::no);
  EXPECT_EQ(wp_membership(parse_element(f2t(), "t")).decision, Decision::no);
  const WpMembership m = wp_membership(parse_element(f2t(), "t^2+t"));
  ASSERT_EQ(m.decision, Decision::yes);
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_EQ(*m.witness * *m.witness + *m.witness, parse_element(f2t(), "t^2+t"));
  EXPECT_ANY_THROW(wp_membership(parse_field("GF(3)")->one()));
}

TEST(WpMembership, FiniteFieldsMatchEnumeration) {
  for (unsigned k = 1; k <= 6; ++k) {
    FieldRef f = galois_field(2, k);
    std::vector<bool> image(*f->order(), false);
    for (std::uint64_t i = 0; i < *f->order(); ++i) {
      const Element x = f->element_at(i);
      image[f->index_of(x * x + x)] = true;
    }
    for (std::uint64_t i = 0; i < *f->order(); ++i)
      EXPECT_EQ(wp_membership(f->element_at(i)).decision, from_bool(image[i])) << "GF(2^" << k << ") #" << i;
  }
}

// Carry-less multiplication reduced by the field's own modulus, then
// compared through discrete-log tables.
std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, const std::vector<std::uint64_t>& modulus, unsigned k) {
  std::uint64_t m = 0;
  for (unsigned i = 0; i <= k; ++i)
    if (modulus[i] & 1) m |= std::uint64_t{1} << i;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k; ++i) {
    if ((b >> i) & 1) r ^= a;
    a <<= 1;
    if ((a >> k) & 1) a ^= m;
  }
  return r;
}

TEST(BinaryFields, AgreeWithLogTables) {
  for (unsigned k = 1; k <= 8; ++k) {
    FieldRef f = galois_field(2, k);
    const auto* ff = f->as_finite();
    const std::uint64_t q = ff->size();
    std::vector<std::uint64_t> exp_table, log_table(q, 0);
    for (std::uint64_t g = 2 % q; g < q; ++g) {
      exp_table.assign(1, 1);
      std::uint64_t x = 1;
      for (std::uint64_t i = 1; i < q - 1; ++i) {
        x = clmul_mod(x, g, ff->modulus(), k);
        if (x == 1) break;
        exp_table.push_back(x);
      }
      if (exp_table.size() == q - 1) break;
    }
    ASSERT_EQ(exp_table.size(), q - 1) << "no primitive element in GF(2^" << k << ")";
    for (std::uint64_t i = 0; i < q - 1; ++i) log_table[exp_table[i]] = i;
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        const std::uint64_t want = (a == 0 || b == 0) ? 0 : exp_table[(log_table[a] + log_table[b]) % (q - 1)];
        ASSERT_EQ(ff->wmul(a, b), want) << "GF(2^" << k << ") " << a << "*" << b;
      }
  }
}

TEST(FiniteFields, FieldAxiomsOnAllElements) {
  for (const char* d : {"GF(3^2)", "GF(5^2)", "GF(2^4)", "GF(7)"}) {
    FieldRef f = parse_field(d);
    for (std::uint64_t i = 1; i < *f->order(); ++i) {
      const Element a = f->element_at(i);
      EXPECT_TRUE((a * a.inverse()).is_one()) << d;
      EXPECT_EQ(f->index_of(a), i);
    }
  }
}

TEST(Parsing, ElementsRoundTrip) {
  Rng rng(9);
  for (const char* d : {"Q", "GF(2^4)", "GF(3)(sqrt(2))", "Q(sqrt(2))", "GF(2)(t)", "GF(2)(t)(artin-schreier(t))"}) {
    FieldRef f = parse_field(d);
    for (int i = 0; i < 50; ++i) {
      const Element a = f->random(rng);
      EXPECT_EQ(parse_element(f, a.str()), a) << d << " " << a.str();
    }
  }
}

TEST(RationalFunctions, CanonicalForm) {
  FieldRef f = parse_field("GF(3)(t)");
  EXPECT_EQ(parse_element(f, "(t^2-1)/(t+1)"), parse_element(f, "t-1"));
  EXPECT_EQ(parse_element(f, "1/t") * parse_element(f, "t"), f->one());
}

}  // namespace
}  // namespace witt
