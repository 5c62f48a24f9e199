#include <doctest.h>

#include <filesystem>
#include <random>

#include "ndfas/decomp.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/io.hpp"
#include "ndfas/oracle.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("dfas instances") {
  const auto tri = gen_from_dfas(triangle(0), 1);
  CHECK(tri.graph.weights_pm_one());
  CHECK(size_of(brute_force_ndfas(tri.graph, 1)) == 1u);
  CHECK(tri.meta["expected"] == "yes");

  const auto dag = gen_from_dfas(make_graph(3, {{0, 1, 5}, {1, 2, 5}}), 0);
  CHECK(size_of(brute_force_ndfas(dag.graph, 0)) == 0u);

  const auto bi = make_graph(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 2, 0}, {2, 0, 0}});
  CHECK(brute_force_ndfas(gen_from_dfas(bi, 3).graph, 3));
  const auto no = gen_from_dfas(bi, 2);
  CHECK_FALSE(brute_force_ndfas(no.graph, 2));
  CHECK(no.meta["expected"] == "no");
}

TEST_CASE("partition gadget (1,1,2)") {
  const auto inst = gen_partition_gadget({1, 1, 2});
  CHECK(inst.budget == 3);
  CHECK(inst.graph.w_plus() == 1);
  CHECK(inst.meta["expected"] == "yes");
  const auto s = brute_force_ndfas(inst.graph, 3);
  REQUIRE(s);
  CHECK(s->size() == 3);
}

TEST_CASE("partition gadget (1,2,3)") {
  const auto inst = gen_partition_gadget({1, 2, 3});
  CHECK(brute_force_ndfas(inst.graph, 3));
  CHECK_FALSE(brute_force_ndfas(inst.graph, 2));
}

TEST_CASE("partition gadget refuses odd totals and bad numbers") {
  CHECK_THROWS_AS(gen_partition_gadget({1, 1, 1}), InputError);
  CHECK_THROWS_AS(gen_partition_gadget({0, 2}), InputError);
  CHECK_THROWS_AS(gen_partition_gadget({}), InputError);
}

TEST_CASE("partition path decomposition") {
  const auto inst = gen_partition_gadget({1, 1, 2});
  const auto td = pathwidth_certificate_partition(inst);
  CHECK(td.bags.size() == 7);
  CHECK(td.width() == 6);
  CHECK(validate_decomposition(inst.graph, td).ok);
  GeneratedInstance foreign = gen_from_dfas(triangle(), 1);
  CHECK_THROWS_AS(pathwidth_certificate_partition(foreign), InputError);
}

TEST_CASE("multicolored clique gadget") {
  // u1=0, u2=1 in class 0, v1=2 in class 1
  const auto yes = gen_multicolored_clique_gadget(3, {{0, 2}}, {0, 0, 1}, 2);
  CHECK(yes.budget == 3);
  CHECK(yes.meta["expected"] == "yes");
  CHECK(size_of(brute_force_ndfas(yes.graph, 3)) == 3u);

  const auto no = gen_multicolored_clique_gadget(3, {}, {0, 0, 1}, 2);
  CHECK(no.budget == 3);
  CHECK(no.meta["expected"] == "no");
  CHECK_FALSE(brute_force_ndfas(no.graph, 3));

  const auto single = gen_multicolored_clique_gadget(1, {}, {0}, 1);
  CHECK(single.budget == 1);
  CHECK(brute_force_ndfas(single.graph, 1));

  CHECK_THROWS_AS(gen_multicolored_clique_gadget(2, {{0, 1}}, {0, 0}, 1), InputError);
  CHECK_THROWS_AS(gen_multicolored_clique_gadget(2, {}, {0, 2}, 2), InputError);
}

TEST_CASE("multicolored clique gadget without a clique") {
  // classes {0,1}, {2,3}, {4}; edges 0-2, 1-3, 0-4, 3-4: no rainbow triangle
  const auto inst = gen_multicolored_clique_gadget(5, {{0, 2}, {1, 3}, {0, 4}, {3, 4}}, {0, 0, 1, 1, 2}, 3);
  CHECK(inst.meta["expected"] == "no");
  CHECK(inst.budget == 6);
}

TEST_CASE("subdivision") {
  const auto single = subdivide_to_unit_weights(make_graph(2, {{0, 1, -3}}));
  CHECK(single.graph.arc_count() == 3);
  CHECK(single.graph.vertex_count() == 4);
  for (const Arc& a : single.graph.arcs()) CHECK(a.weight == -1);
  CHECK(single.arc_back_map == std::vector<ArcId>{0, 0, 0});

  const auto unit = make_graph(3, {{0, 1, -1}, {1, 2, 0}, {2, 0, 1}});
  const auto same = subdivide_to_unit_weights(unit);
  CHECK(same.graph.vertex_count() == 3);
  CHECK(same.graph.arc_count() == 3);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_digraph(4, 6, -2, 2, rng);
    const auto sub = subdivide_to_unit_weights(g);
    CHECK(sub.graph.weights_within(-1, 1));
    CHECK(size_of(brute_force_ndfas(g, 3)) == size_of(brute_force_ndfas(sub.graph, 3)));
  }
}

TEST_CASE("bedc chain") {
  // s=0, t=2: a direct arc and a path of length 2
  const auto dag = make_graph(3, {{0, 2, 0}, {0, 1, 0}, {1, 2, 0}});
  const auto one = gen_bedc_chain(dag, 0, 2, 1, 1);
  CHECK(one.graph.weights_pm_one());
  CHECK(one.meta["expected"] == "yes");
  const auto s = brute_force_ndfas(one.graph, 1);
  REQUIRE(s);
  CHECK(*s == DeletionSet({0}));

  CHECK_FALSE(brute_force_ndfas(gen_bedc_chain(dag, 0, 2, 0, 1).graph, 0));

  // ell below the shortest s-t path length: nothing to cut
  const auto none = gen_bedc_chain(dag, 0, 2, 0, 0);
  CHECK(size_of(brute_force_ndfas(none.graph, 0)) == 0u);

  CHECK_THROWS_AS(gen_bedc_chain(triangle(), 0, 1, 1, 1), InputError);
  CHECK_THROWS_AS(gen_bedc_chain(dag, 1, 1, 1, 1), InputError);
}

TEST_CASE("sidecar files") {
  const auto dir = std::filesystem::temp_directory_path() / "ndfas_gen_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "gadget.ndfas").string();
  const auto inst = gen_partition_gadget({2, 2});
  write_instance(inst, path);
  CHECK(sidecar_path(path) == (dir / "gadget.meta.json").string());
  const auto back = read_ndfas_file(path);
  CHECK(back.arc_count() == inst.graph.arc_count());
  const auto meta = nlohmann::json::parse(read_text_file(sidecar_path(path)));
  CHECK(meta["family"] == "partition");
  CHECK(meta["expected"] == "yes");
  CHECK(meta["budget"] == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("random families") {
  std::mt19937_64 rng(9);
  const auto hub = gen_hub_triangles(10, -2, 2, rng);
  CHECK(compute_treedepth(hub).depth <= 4);
  const auto ktree = gen_partial_ktree(30, 3, 0.8, -1, 1, rng);
  CHECK(compute_tree_decomposition(ktree).width() <= 3);
  const auto dag = random_dag(8, 15, rng);
  for (const auto& c : strong_components(dag)) CHECK(c.size() == 1);
}
