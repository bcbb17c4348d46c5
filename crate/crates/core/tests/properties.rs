// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

mod common;

use ivcolor::coloring::normalize;
use ivcolor::graph::{
    gen_random_outerplanar_subcubic, gen_triangular_fan, read_edge_list, write_dot, write_edge_list,
};
use ivcolor::{
    color_fan, color_subcubic_le4, find_lemma1_config, is_interval_coloring,
    recognize_outerplanar_2connected, EdgeColoring,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(n in 4usize..40, seed in any::<u64>()) {
        let g = gen_random_outerplanar_subcubic(n, seed).unwrap();
        let text = write_edge_list(&g);
        let back = read_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn random_generator_output_is_recognized(n in 4usize..60, seed in any::<u64>()) {
        let g = gen_random_outerplanar_subcubic(n, seed).unwrap();
        prop_assert_eq!(g.max_degree(), 3);
        prop_assert_eq!(g.vertex_count(), n);
        let emb = recognize_outerplanar_2connected(&g).unwrap();
        prop_assert!(common::chords_cross_quadratic(&emb).is_none());
    }

    #[test]
    fn generator_is_deterministic(n in 4usize..40, seed in any::<u64>()) {
        prop_assert_eq!(
            gen_random_outerplanar_subcubic(n, seed).unwrap(),
            gen_random_outerplanar_subcubic(n, seed).unwrap()
        );
    }

    #[test]
    fn shifting_colors_keeps_the_verdict(n in 4usize..24, seed in any::<u64>(), shift in 1usize..10) {
        let g = gen_random_outerplanar_subcubic(n, seed).unwrap();
        let c = color_subcubic_le4(&g).unwrap();
        let mut shifted = c.map_colors(|x| x + shift);
        shifted.set_t(c.t() + shift);
        prop_assert!(is_interval_coloring(&g, &shifted).is_err());
        let back = normalize(&shifted);
        prop_assert_eq!(&back, &c);
        prop_assert!(is_interval_coloring(&g, &back).is_ok());
    }

    #[test]
    fn lemma1_configuration_exists(n in 4usize..40, seed in any::<u64>()) {
        let g = gen_random_outerplanar_subcubic(n, seed).unwrap();
        let cfg = find_lemma1_config(&g).unwrap();
        prop_assert!(cfg.holds_in(&g));
    }

    #[test]
    fn some_transposition_breaks_a_fan_coloring(n in 4usize..30) {
        let g = gen_triangular_fan(n).unwrap().graph;
        let c = color_fan(n).unwrap();
        prop_assert!(is_interval_coloring(&g, &c).is_ok());
        let t = c.t();
        let broken = (1..=t).any(|a| {
            (a + 1..=t).any(|b| {
                let s = c.map_colors(|x| if x == a { b } else if x == b { a } else { x });
                is_interval_coloring(&g, &s).is_err()
            })
        });
        prop_assert!(broken);
    }
}

#[test]
fn enumerated_graphs_have_lemma1_configurations() {
    for g in common::subcubic_outerplanar_upto(12) {
        if g.is_cycle() {
            continue;
        }
        let cfg = find_lemma1_config(&g).unwrap();
        assert!(cfg.holds_in(&g), "{g:?}");
    }
}

#[test]
fn dot_output_parses() {
    let g = gen_triangular_fan(3).unwrap().graph;
    let c = color_fan(3).unwrap();
    for dot in [
        write_dot(&g, None).unwrap(),
        write_dot(&g, Some(&c)).unwrap(),
    ] {
        graphviz_rust::parse(&dot).unwrap_or_else(|e| panic!("{e}\n{dot}"));
    }
}

#[test]
fn dot_rejects_foreign_coloring() {
    let g = gen_triangular_fan(3).unwrap().graph;
    let c = EdgeColoring::from_pairs(1, [((0, 4), 1)]);
    assert!(write_dot(&g, Some(&c)).is_err());
}

#[test]
fn coloring_json_round_trip() {
    for n in 3..=12 {
        let c = color_fan(n).unwrap();
        let back = EdgeColoring::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), c.to_json());
    }
}
