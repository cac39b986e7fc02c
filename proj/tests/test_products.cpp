#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derivar/parser.hpp"
#include "derivar/products.hpp"

using namespace derivar;

namespace {

const std::vector<std::string> kPair = {"prec", "succ"};
const std::vector<std::string> kRaw = {"m"};

Poly D(const std::string& src) { return parse_expr(src, kPair); }
Poly R(const std::string& src) { return parse_expr(src, kRaw); }

Monomial mono(const std::string& src, const std::vector<std::string>& ops) {
    Poly p = parse_expr(src, ops);
    REQUIRE(p.term_count() == 1);
    return p.terms().begin()->first;
}

const Poly kEq5 = D("prec(succ(x1,x2),x3) - succ(x1,prec(x2,x3))");
const Poly kEq6 =
    D("prec(prec(x1,x2),x3) - prec(x1,succ(x2,x3)) + succ(prec(x1,x2),x3) - succ(x1,succ(x2,x3))");
const Poly kEq1Prec =
    D("prec(prec(x1,x2),x3) - prec(x1,prec(x2,x3)) - prec(prec(x2,x1),x3) + prec(x2,prec(x1,x3))");
const Poly kEq2Prec = D("prec(prec(x1,x2),x3) - prec(prec(x1,x3),x2)");

}  // namespace

TEST_CASE("pair alphabet symbols and names") {
    PairAlphabet a(builtin("as"), builtin("nov"));
    CHECK(a.size() == 2);
    CHECK(a.names() == std::vector<std::string>{"prec", "succ"});
    CHECK(a.symbol(0).crossed == false);
    CHECK(a.symbol(1).crossed == true);

    PairAlphabet mm(builtin("mag"), builtin("mag"));
    CHECK(mm.size() == 2);
    CHECK(mm.names() == std::vector<std::string>{"al_m_m", "cr_m_m"});
}

TEST_CASE("evaluation matches the eight listed composition images") {
    PairAlphabet a(builtin("as"), builtin("nov"));
    auto img = [&](const std::string& pair_expr) { return a.evaluate(mono(pair_expr, kPair)); };
    auto raw = [&](const std::string& e) { return mono(e, kRaw); };

    CHECK(img("prec(prec(x1,x2),x3)") ==
          std::pair(raw("m(m(x1,x2),x3)"), raw("m(m(x1,x2),x3)")));
    CHECK(img("succ(x1,succ(x2,x3))") ==
          std::pair(raw("m(x1,m(x2,x3))"), raw("m(m(x3,x2),x1)")));
    CHECK(img("prec(succ(x1,x2),x3)") ==
          std::pair(raw("m(m(x1,x2),x3)"), raw("m(m(x2,x1),x3)")));
    CHECK(img("succ(x1,prec(x2,x3))") ==
          std::pair(raw("m(x1,m(x2,x3))"), raw("m(m(x2,x3),x1)")));
    CHECK(img("succ(prec(x1,x2),x3)") ==
          std::pair(raw("m(m(x1,x2),x3)"), raw("m(x3,m(x1,x2))")));
    CHECK(img("prec(x1,succ(x2,x3))") ==
          std::pair(raw("m(x1,m(x2,x3))"), raw("m(x1,m(x3,x2))")));
    CHECK(img("prec(x1,prec(x2,x3))") ==
          std::pair(raw("m(x1,m(x2,x3))"), raw("m(x1,m(x2,x3))")));
    CHECK(img("succ(succ(x1,x2),x3)") ==
          std::pair(raw("m(m(x1,x2),x3)"), raw("m(x3,m(x2,x1))")));
}

TEST_CASE("phi column is the tensor of the two normal forms") {
    OperadPresentation as = builtin("as");
    OperadPresentation nov = builtin("nov");
    Matrix phi = phi_map(as, nov, 3);
    auto cas = component(as, 3);
    auto cnov = component(nov, 3);
    std::size_t col = index_of(mono("prec(prec(x1,x2),x3)", kPair), 2);
    auto vp = normal_form(*cas, R("m(m(x1,x2),x3)"));
    auto vq = normal_form(*cnov, R("m(m(x1,x2),x3)"));
    for (std::size_t i = 0; i < vp.size(); ++i)
        for (std::size_t j = 0; j < vq.size(); ++j)
            CHECK(phi.at(i * vq.size() + j, col) == vp[i] * vq[j]);
}

TEST_CASE("phi columns: commutativity of P collapses prec/succ at arity 2") {
    Matrix phi = phi_map(builtin("com"), builtin("nov"), 2);
    // column of x1 prec x2 equals column of x2 succ x1
    std::size_t c1 = index_of(mono("prec(x1,x2)", kPair), 2);
    std::size_t c2 = index_of(mono("succ(x2,x1)", kPair), 2);
    for (std::size_t r = 0; r < phi.rows(); ++r) CHECK(phi.at(r, c1) == phi.at(r, c2));
}

TEST_CASE("white product dimensions across the builtins") {
    struct Row {
        const char* name;
        std::size_t rank, nullity, a2k, induced, newdim;
    };
    // frozen from the brute-force script
    const Row rows[] = {
        {"mag", 48, 0, 0, 0, 0},  {"com", 6, 42, 2, 36, 6}, {"as", 36, 12, 0, 0, 12},
        {"lie", 12, 36, 2, 36, 0}, {"nov", 36, 12, 0, 0, 12},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        WhiteResult w = derived_identities(builtin(row.name), 3);
        CHECK(w.image_dim == row.rank);
        CHECK(w.relations.dim() == row.nullity);
        CHECK(w.arity2_kernel.dim() == row.a2k);
        CHECK(w.induced.dim() == row.induced);
        CHECK(w.new_dim == row.newdim);
        CHECK(w.new_generators.size() == row.newdim);
        CHECK(w.image_dim + w.relations.dim() == 48);
    }
}

TEST_CASE("as o nov kernel contains the two listed identities") {
    WhiteResult w = derived_identities(builtin("as"), 3);
    CHECK(w.relations.contains(coords(kEq5)));
    CHECK(w.relations.contains(coords(kEq6)));
    CHECK(!w.relations.contains(coords(D("prec(prec(x1,x2),x3)"))));
}

TEST_CASE("relations_match") {
    WhiteResult as3 = derived_identities(builtin("as"), 3);
    CHECK(relations_match(as3, {kEq5, kEq6}));
    CHECK(!relations_match(as3, {kEq5}));
    CHECK(!relations_match(as3, {}));

    WhiteResult lie3 = derived_identities(builtin("lie"), 3);
    CHECK(relations_match(lie3, {}));

    WhiteResult com3 = derived_identities(builtin("com"), 3);
    CHECK(relations_match(com3, {kEq1Prec, kEq2Prec}));
    CHECK(!relations_match(com3, {kEq2Prec}));

    CHECK_THROWS_AS(relations_match(as3, {R("m(x1,x2)")}), std::invalid_argument);
}

TEST_CASE("arity-2 identifications") {
    WhiteResult com2 = derived_identities(builtin("com"), 2);
    CHECK(com2.relations.dim() == 2);
    CHECK(com2.relations.contains(coords(D("succ(x1,x2) - prec(x2,x1)"))));

    WhiteResult lie2 = derived_identities(builtin("lie"), 2);
    CHECK(lie2.relations.dim() == 2);
    CHECK(lie2.relations.contains(coords(D("succ(x1,x2) + prec(x2,x1)"))));

    WhiteResult as2 = derived_identities(builtin("as"), 2);
    CHECK(as2.relations.dim() == 0);
    CHECK(as2.image_dim == 4);
}

TEST_CASE("kernel is S_n-invariant") {
    WhiteResult w = derived_identities(builtin("as"), 3);
    for (const Perm& sigma : Perm::all(3))
        for (std::size_t i = 0; i < w.relations.dim(); ++i) {
            Poly v = poly_from_coords(3, 2, w.relations.basis().row(i));
            CHECK(w.relations.contains(coords(act(sigma, v))));
        }
}

TEST_CASE("mag o mag smoke") {
    WhiteResult w = white_relations(builtin("mag"), builtin("mag"), 3);
    CHECK(w.image_dim == 48);
    CHECK(w.relations.dim() == 0);
    // image dimension equals the dimension of the image subspace computed
    // from the columns directly
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < w.phi.cols(); ++c) {
        std::vector<Rational> col(w.phi.rows());
        for (std::size_t r = 0; r < w.phi.rows(); ++r) col[r] = w.phi.at(r, c);
        cols.push_back(std::move(col));
    }
    CHECK(Subspace::from_vectors(w.phi.rows(), cols).dim() == w.image_dim);
}

TEST_CASE("no kernel vector is supported on a single monomial") {
    for (const std::string& name : {"as", "com", "lie"}) {
        WhiteResult w = derived_identities(builtin(name), 3);
        for (std::size_t i = 0; i < 48; ++i) {
            std::vector<Rational> e(48);
            e[i] = 1;
            CHECK(!w.relations.contains(e));
        }
    }
}

TEST_CASE("arity bound") {
    CHECK_THROWS_AS(white_relations(builtin("as"), builtin("nov"), 1), std::invalid_argument);
    CHECK_THROWS_AS(white_relations(builtin("as"), builtin("nov"), kMaxArity + 1),
                    std::invalid_argument);
}

TEST_CASE("two-operation presentations") {
    OperadPresentation two;
    two.name = "mag2";
    two.ops = {"a", "b"};

    PairAlphabet pa(two, builtin("nov"));
    CHECK(pa.size() == 4);
    CHECK(pa.names() == std::vector<std::string>{"prec_a", "succ_a", "prec_b", "succ_b"});

    // frozen from the brute-force script: the map is injective at both arities
    WhiteResult w2 = derived_identities(two, 2);
    CHECK(w2.relations.dim() == 0);
    CHECK(w2.image_dim == 8);
    WhiteResult w3 = derived_identities(two, 3);
    CHECK(w3.phi.cols() == 192);
    CHECK(w3.image_dim == 192);
    CHECK(w3.relations.dim() == 0);
}

TEST_CASE("sn_closure_span matches the full-orbit span") {
    std::vector<Poly> gens = {D("prec(succ(x1,x2),x3) - succ(x1,prec(x2,x3))")};
    Subspace fast = sn_closure_span(gens, 3, 2);
    RrefBuilder slow(48);
    for (const Perm& sigma : Perm::all(3)) slow.insert(coords(act(sigma, gens[0])));
    CHECK(fast == std::move(slow).take());
    CHECK(fast.dim() == 6);
}
