"""
DOT and JSON exports of links, Whitehead graphs, normal forms and
decompositions.
"""

from typing import Sequence

import pandas as pd

from complexes.invariants import betti1, euler_characteristic
from complexes.links import LinkGraph
from decomposition.engine import GrushkoDecomposition, NormalForm, TraceEvent
from freewords.whitehead import WhiteheadGraph, vertex_label

VERTICAL_STYLE = 'shape=circle style=filled fillcolor=lightblue'
HORIZONTAL_STYLE = 'shape=box style=filled fillcolor=lightyellow'


def link_to_dot(link: LinkGraph, name: str = 'link') -> str:
    lines = [f'graph {name} {{']
    for node in link.graph.vertices:
        style = VERTICAL_STYLE if link.is_vertical(node) else HORIZONTAL_STYLE
        lines.append(f'    n{node} [label="{link.describe(node)}" {style}]')
    for (u, v), (tube, index) in zip(link.graph.edges, link.corners):
        lines.append(f'    n{u} -- n{v} [label="{tube}:{index}"]')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def whitehead_to_dot(graph: WhiteheadGraph, name: str = 'whitehead') -> str:
    lines = [f'graph {name} {{']
    for v in range(graph.n_vertices):
        lines.append(f'    v{v} [label="{vertex_label(v)}" {VERTICAL_STYLE}]')
    for u, v in graph.edges:
        lines.append(f'    v{u} -- v{v}')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def trace_frame(trace: Sequence[TraceEvent]) -> pd.DataFrame:
    """One row per recorded move with cell counts before and after."""
    rows = []
    for event in trace:
        row = {'step': event.step, 'kind': event.kind}
        row['location'] = '' if event.location is None else ' '.join(f'{k}={v}' for k, v in event.location.items())
        for prefix, counts in (('before', event.before), ('after', event.after)):
            for key, value in counts.to_dict().items():
                row[f'{prefix}_{key}'] = value
        rows.append(row)
    columns = ['step', 'kind', 'location'] + [
        f'{prefix}_{key}' for prefix in ('before', 'after') for key in ('vertices', 'edges', 'squares')
    ]
    return pd.DataFrame(rows, columns=columns)


def normal_form_to_dict(form: NormalForm) -> dict:
    record = {
        'outcome': form.outcome.value,
        'sl_moves': form.move_count,
        'squares': form.complex.n_squares,
        'euler_characteristic': euler_characteristic(form.complex),
        'betti1': betti1(form.complex),
        'witness': None if form.witness is None else form.witness.to_dict(form.complex),
        'trace': [event.to_dict() for event in form.trace],
    }
    return record


def decomposition_to_dict(decomposition: GrushkoDecomposition, input_betti1: int, piece_files=()) -> dict:
    piece_betti = [betti1(piece) for piece in decomposition.pieces]
    return {
        'pieces': [
            {'squares': piece.n_squares, 'betti1': b, 'file': str(path) if path else None}
            for piece, b, path in zip(
                decomposition.pieces, piece_betti, list(piece_files) + [None] * len(decomposition.pieces)
            )
        ],
        'free_rank': decomposition.free_rank,
        'betti1': {
            'input': input_betti1,
            'pieces': sum(piece_betti),
            'free_rank': decomposition.free_rank,
            'balanced': input_betti1 == sum(piece_betti) + decomposition.free_rank,
        },
        'cuts': [record.to_dict() for record in decomposition.cut_log],
        'trace': [event.to_dict() for event in decomposition.trace],
    }
