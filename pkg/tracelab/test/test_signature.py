# Copyright 2024 The tracelab authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Test monoidal graphs, distributed alphabets and independence relations.
"""

import itertools
import unittest
from hypothesis import given, settings, strategies as st
from tracelab import errors
from tracelab.examples import greek_alphabet
from tracelab.grammar import circuit_grammar
from tracelab.signature import Box, Distribution, GraphMorphism, IndependenceRelation, MonoidalGraph, \
    alphabet_to_distribution, compose_morphisms, dependence, distribution_equiv, distribution_leq, \
    distribution_to_alphabet, distribution_to_independence, independence_to_distribution, loc, \
    maximal_cliques, validate_distributed_alphabet, validate_graph_morphism
from tracelab.test.oracles import all_independence_relations, subset_cliques


def _graph(boxes, sorts=('1', '2', '3')):
    return MonoidalGraph(sorts, [Box(name, a, c) for name, a, c in boxes])


class TestMonoidalGraph(unittest.TestCase):

    def test_undeclared_sort(self):
        with self.assertRaises(errors.UnknownSort):
            MonoidalGraph(['A'], [Box('f', ['A'], ['B'])])

    def test_duplicates(self):
        with self.assertRaises(errors.InvalidDocument):
            MonoidalGraph(['A', 'A'], [])
        with self.assertRaises(errors.InvalidDocument):
            MonoidalGraph(['A'], [Box('f', ['A'], ['A']), Box('f', [], [])])

    def test_equality_ignores_box_order_and_name(self):
        g1 = MonoidalGraph(['A'], [Box('f', ['A'], ['A']), Box('g', [], ['A'])], name='x')
        g2 = MonoidalGraph(['A'], [Box('g', [], ['A']), Box('f', ['A'], ['A'])], name='y')
        self.assertEqual(g1, g2)
        self.assertEqual(hash(g1), hash(g2))

    def test_map_round_trip(self):
        g = greek_alphabet().graph
        self.assertEqual(g, MonoidalGraph.from_map(g.to_map()))

    def test_from_map_missing_key(self):
        with self.assertRaises(errors.InvalidDocument):
            MonoidalGraph.from_map({'sorts': ['A']})
        with self.assertRaises(errors.InvalidDocument):
            MonoidalGraph.from_map([])

    def test_from_map_wrong_shape(self):
        for d in [{'sorts': ['A'], 'boxes': 5},
                  {'sorts': 'A', 'boxes': []},
                  {'sorts': ['A'], 'boxes': [['f', ['A'], ['A']]]},
                  {'sorts': ['A'], 'boxes': [{'name': 1, 'arity': ['A'], 'coarity': ['A']}]}]:
            with self.assertRaises(errors.InvalidDocument, msg=repr(d)):
                MonoidalGraph.from_map(d)
        with self.assertRaises(errors.InvalidDocument):
            IndependenceRelation.from_map({'alphabet': ['a', 'b'], 'pairs': 7})
        with self.assertRaises(errors.InvalidDocument):
            IndependenceRelation.from_map({'alphabet': ['a', 'b'], 'pairs': ['ab']})
        with self.assertRaises(errors.InvalidDocument):
            Distribution.from_map({'components': [['a'], 'b']})


class TestDistributedAlphabet(unittest.TestCase):

    def test_greek_alphabet_valid(self):
        a = greek_alphabet()
        self.assertEqual(3, a.k)
        self.assertEqual(5, len(a.actions))
        self.assertEqual(frozenset({1, 2}), loc(a, 'γ'))

    def test_empty_boundary(self):
        with self.assertRaises(errors.EmptyBoundary):
            validate_distributed_alphabet(_graph([('e', [], [])]))

    def test_source_target_mismatch(self):
        with self.assertRaises(errors.SourceTargetMismatch):
            validate_distributed_alphabet(_graph([('γ', ['1', '2'], ['1'])]))

    def test_sort_repeated(self):
        with self.assertRaises(errors.SortRepeated):
            validate_distributed_alphabet(_graph([('γ', ['1', '1'], ['1', '1'])]))

    def test_sorts_out_of_order(self):
        with self.assertRaises(errors.SortsOutOfOrder):
            validate_distributed_alphabet(_graph([('γ', ['2', '1'], ['2', '1'])]))

    def test_sorts_not_ordinal(self):
        with self.assertRaises(errors.SortsNotOrdinal):
            validate_distributed_alphabet(MonoidalGraph(['A'], [Box('a', ['A'], ['A'])]))
        with self.assertRaises(errors.SortsNotOrdinal):
            validate_distributed_alphabet(MonoidalGraph([], []))
        with self.assertRaises(errors.SortsNotOrdinal):
            validate_distributed_alphabet(MonoidalGraph(['1', '3'], []))

    def test_errors_are_not_distributed_alphabet(self):
        with self.assertRaises(errors.NotDistributedAlphabet):
            validate_distributed_alphabet(_graph([('e', [], [])]))

    def test_loc(self):
        a = validate_distributed_alphabet(_graph([('γ', ['1', '2'], ['1', '2']), ('δ', ['2'], ['2'])]))
        self.assertEqual(frozenset({1, 2}), loc(a, 'γ'))
        self.assertEqual(frozenset({2}), loc(a, 'δ'))
        with self.assertRaises(errors.UnknownGenerator):
            loc(a, 'x')
        d = Distribution([['a', 'b'], ['b', 'c']])
        self.assertEqual(frozenset({1, 2}), d.loc('b'))


class TestGraphMorphism(unittest.TestCase):

    def test_identity(self):
        g = greek_alphabet().graph
        m = GraphMorphism.identity(g)
        self.assertIs(m, validate_graph_morphism(m))

    def test_circuit_grammar_morphism(self):
        m = circuit_grammar().morphism
        self.assertIs(m, validate_graph_morphism(m))

    def test_incompatible_box_image(self):
        src = MonoidalGraph(['A'], [Box('f', ['A', 'A'], ['A'])])
        dst = MonoidalGraph(['X'], [Box('p', ['X'], ['X'])])
        with self.assertRaises(errors.IncompatibleBoxImage):
            validate_graph_morphism(GraphMorphism(src, dst, {'A': 'X'}, {'f': 'p'}))

    def test_not_total(self):
        src = MonoidalGraph(['A'], [Box('f', ['A'], ['A'])])
        dst = MonoidalGraph(['X'], [Box('p', ['X'], ['X'])])
        with self.assertRaises(errors.UnknownGenerator):
            validate_graph_morphism(GraphMorphism(src, dst, {'A': 'X'}, {}))
        with self.assertRaises(errors.UnknownSort):
            validate_graph_morphism(GraphMorphism(src, dst, {}, {'f': 'p'}))

    def test_compose(self):
        m = circuit_grammar().morphism
        c = compose_morphisms(GraphMorphism.identity(m.source), m)
        self.assertEqual(m, c)


class TestIndependence(unittest.TestCase):

    def test_irreflexive(self):
        with self.assertRaises(errors.InvalidDocument):
            IndependenceRelation(['a'], [('a', 'a')])
        with self.assertRaises(errors.UnknownAction):
            IndependenceRelation(['a'], [('a', 'b')])

    def test_symmetric(self):
        ind = IndependenceRelation(['a', 'b'], [('b', 'a')])
        self.assertTrue(ind.independent('a', 'b'))
        self.assertTrue(ind.independent('b', 'a'))

    def test_dependence(self):
        ind = IndependenceRelation(['a', 'b', 'c'], [('a', 'c')])
        self.assertEqual({frozenset('ab'), frozenset('bc')}, set(dependence(ind)))

    def test_ind2dist_examples(self):
        ind = IndependenceRelation(['a', 'b', 'c'], [('a', 'c')])
        self.assertEqual(Distribution([['a', 'b'], ['b', 'c']]), independence_to_distribution(ind))
        self.assertEqual(Distribution([['a', 'b']]), independence_to_distribution(IndependenceRelation('ab')))
        full = IndependenceRelation('abc', itertools.combinations('abc', 2))
        self.assertEqual(Distribution([['a'], ['b'], ['c']]), independence_to_distribution(full))

    def test_empty_alphabet(self):
        self.assertEqual(0, len(independence_to_distribution(IndependenceRelation([]))))

    def test_dist2ind_examples(self):
        d = Distribution([['a', 'b'], ['b', 'c']])
        self.assertEqual(IndependenceRelation('abc', [('a', 'c')]), distribution_to_independence(d))
        self.assertEqual(IndependenceRelation('ab'), distribution_to_independence(Distribution(['ab'])))
        self.assertEqual(IndependenceRelation('ab', [('a', 'b')]),
                         distribution_to_independence(Distribution([['a'], ['b']])))

    def test_empty_component(self):
        with self.assertRaises(errors.EmptyComponent):
            Distribution([['a'], []])

    def test_galois_insertion_exhaustive(self):
        relations = list(all_independence_relations('abcd'))
        self.assertEqual(64, len(relations))
        for ind in relations:
            self.assertEqual(ind, distribution_to_independence(independence_to_distribution(ind)))

    def test_monotone(self):
        relations = list(all_independence_relations('abc'))
        for i1, i2 in itertools.product(relations, repeat=2):
            d1 = independence_to_distribution(i1)
            d2 = independence_to_distribution(i2)
            if i1 <= i2:
                self.assertTrue(distribution_leq(d1, d2))
            if distribution_leq(d1, d2):
                self.assertTrue(distribution_to_independence(d1) <= distribution_to_independence(d2))

    def test_cliques_match_subset_oracle(self):
        for ind in all_independence_relations('abcd'):
            edges = dependence(ind)
            expect = subset_cliques(ind.alphabet, edges)
            self.assertEqual(expect, maximal_cliques(ind.alphabet, edges))
            self.assertEqual(expect, maximal_cliques(ind.alphabet, edges, brute_force_limit=0))

    @given(st.sets(st.tuples(st.sampled_from('abcdefg'), st.sampled_from('abcdefg')), max_size=21))
    @settings(max_examples=50, deadline=None)
    def test_cliques_agree_with_networkx(self, pairs):
        edges = [p for p in pairs if p[0] != p[1]]
        vertices = 'abcdefg'
        self.assertEqual(maximal_cliques(vertices, edges, brute_force_limit=0),
                         maximal_cliques(vertices, edges, brute_force_limit=20))


class TestDistribution(unittest.TestCase):

    def test_leq_examples(self):
        one = Distribution(['abc'])
        two = Distribution(['ab', 'bc'])
        three = Distribution(['a', 'b', 'c'])
        self.assertTrue(distribution_leq(one, two))
        self.assertTrue(distribution_leq(two, two))
        self.assertFalse(distribution_leq(three, one))
        with self.assertRaises(errors.AlphabetMismatch):
            distribution_leq(one, Distribution(['ab']))

    def test_equiv_up_to_permutation(self):
        self.assertTrue(distribution_equiv(Distribution(['ab', 'bc']), Distribution(['bc', 'ab'])))
        self.assertFalse(distribution_equiv(Distribution(['abc']), Distribution(['ab', 'bc'])))

    def test_to_alphabet(self):
        a = distribution_to_alphabet(Distribution(['ab', 'bc']))
        self.assertEqual(('1', ), a.graph.box('a').arity)
        self.assertEqual(('1', '2'), a.graph.box('b').arity)
        self.assertEqual(('2', ), a.graph.box('c').coarity)
        single = distribution_to_alphabet(Distribution(['a']))
        self.assertEqual([Box('a', ['1'], ['1'])], list(single.graph.boxes))

    def test_empty_distribution_has_no_alphabet(self):
        empty = independence_to_distribution(IndependenceRelation([]))
        self.assertEqual(IndependenceRelation([]), distribution_to_independence(empty))
        with self.assertRaises(errors.EmptyDistribution):
            distribution_to_alphabet(empty)
        with self.assertRaises(errors.SortsNotOrdinal):
            distribution_to_alphabet(Distribution([]))

    def test_round_trips_exhaustive(self):
        for k in range(1, 4):
            for components in itertools.product(
                    [c for r in range(1, 5) for c in itertools.combinations('abcd', r)], repeat=k):
                d = Distribution(components)
                a = distribution_to_alphabet(d)
                self.assertEqual(d, alphabet_to_distribution(a))
                self.assertEqual(a, distribution_to_alphabet(alphabet_to_distribution(a)))

    def test_unused_location(self):
        a = validate_distributed_alphabet(_graph([('a', ['1'], ['1'])], sorts=('1', '2')))
        with self.assertRaises(errors.EmptyComponent):
            alphabet_to_distribution(a)

    def test_map_round_trip(self):
        d = Distribution(['ab', 'bc'])
        self.assertEqual(d, Distribution.from_map(d.to_map()))
        ind = distribution_to_independence(d)
        self.assertEqual(ind, IndependenceRelation.from_map(ind.to_map()))
