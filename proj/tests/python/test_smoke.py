# Copyright 2026 The itclust Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import os
import pathlib

import pytest

import itclust

DATA = pathlib.Path(os.environ.get("ITCLUST_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_hand_traced_tree():
    tree = itclust.build_it([(0, 0), (1, 0), (2, 0)], [3, 1, 2])
    assert tree.parent == [1, 1, 1]
    assert tree.roots() == [1]
    assert itclust.decision_graph(tree) == [(0, 3.0, 1.0), (2, 2.0, 1.0)]
    cut = itclust.dg_auto_cut(tree, 2)
    assert cut.assignment.cluster_id == [0, 0, 1]
    with pytest.raises(itclust.KTooLarge):
        itclust.dg_auto_cut(tree, 4)
    with pytest.raises(itclust.InvalidCutNode):
        itclust.dg_manual_cut(tree, [1])


def test_local_sizes_and_transform():
    pts = [(0, 0), (1, 0), (0, 1)]
    assert itclust.local_size(pts, "simplex") == [0.5, 0.5, 0.5]
    assert itclust.local_size(pts, "voronoi") == pytest.approx([0.25, 0.125, 0.125])
    p = itclust.transform([1, 2, 4], "log-ratio")
    assert p == pytest.approx([math.log(2), math.log(3), math.log(5)])
    with pytest.raises(itclust.DegenerateInput):
        itclust.delaunay([(0, 0), (1, 0), (2, 0)])


def test_semi_supervised_chain():
    pts = [(0, 0), (1, 0), (2, 0), (10, 0), (11, 0), (12, 0)]
    tree = itclust.build_it(pts, [0, 1, 2, 3, 4, 5])
    cut = itclust.ss_divisive_cut(tree, {0: "A", 5: "B"})
    assert cut.cut_nodes == [3]
    assert cut.assignment.cluster_id == [0, 0, 0, 1, 1, 1]
    with pytest.raises(itclust.InsufficientLabels):
        itclust.ss_divisive_cut(tree, {0: "A"})


def test_flame_end_to_end():
    points, truth = itclust.load_points(str(DATA / "flame.txt"))
    s = itclust.local_size(points, "simplex")
    tree = itclust.build_it(points, itclust.transform(s, "log-ratio"))
    assert len(tree.roots()) == 1
    cut = itclust.dg_auto_cut(tree, 2)
    assert itclust.adjusted_rand_index(cut.assignment.cluster_id, truth) >= 0.85
    assert itclust.InTree.from_json(tree.to_json()).parent == tree.parent
