"""
Reading and writing complexes as .tgg JSON documents.

Documents are checked against schemas/complex.schema.json first; the checks
JSON Schema cannot express (walk lengths, edge references, graph names) are
reported with the same JSON-pointer paths.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Union

import jsonschema

from complexes.tubular import Tube, TubeEnd, TubularComplex, VertexGraph
from utils.errors import DocumentError, GraphError, MalformedComplexError
from utils.graph_core import SimplicialGraph

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
SCHEMA_DIR = Path(__file__).resolve().parent.parent / 'schemas'

_schemas: Dict[str, dict] = {}


def load_schema(name: str) -> dict:
    if name not in _schemas:
        with open(SCHEMA_DIR / f'{name}.schema.json') as handle:
            _schemas[name] = json.load(handle)
    return _schemas[name]


def _pointer(path) -> str:
    return ''.join(f'/{part}' for part in path)


def check_schema(document, name: str):
    """Raise DocumentError at the first schema violation."""
    validator = jsonschema.Draft7Validator(load_schema(name))
    errors = sorted(validator.iter_errors(document), key=lambda error: list(map(str, error.absolute_path)))
    if errors:
        error = errors[0]
        raise DocumentError(_pointer(error.absolute_path), error.message)


def parse_complex(document: dict) -> TubularComplex:
    check_schema(document, 'complex')

    names = {}
    vertex_graphs = []
    for s, entry in enumerate(document['vertex_graphs']):
        position = f'/vertex_graphs/{s}'
        vertices = entry['vertices']
        if vertices != list(range(len(vertices))):
            raise DocumentError(f'{position}/vertices', 'vertices must be 0, 1, ..., n-1 in order')
        if entry['name'] in names:
            raise DocumentError(f'{position}/name', f"duplicate graph name {entry['name']!r}")
        names[entry['name']] = s
        try:
            graph = SimplicialGraph(len(vertices), [tuple(edge) for edge in entry['edges']])
        except GraphError as exc:
            raise DocumentError(f'{position}/edges', str(exc)) from exc
        vertex_graphs.append(VertexGraph(entry['name'], graph))

    tubes = []
    for a, entry in enumerate(document['tubes']):
        ends = []
        for side in (0, 1):
            end = entry[f'end{side}']
            if end['graph'] not in names:
                raise DocumentError(f'/tubes/{a}/end{side}/graph', f"unknown graph {end['graph']!r}")
            if len(end['walk']) != entry['circle_len']:
                raise DocumentError(
                    f'/tubes/{a}/end{side}/walk',
                    f"walk has {len(end['walk'])} steps but circle_len is {entry['circle_len']}",
                )
            ends.append(TubeEnd(names[end['graph']], tuple(end['walk'])))
        tubes.append(Tube(entry['circle_len'], (ends[0], ends[1])))

    try:
        return TubularComplex(vertex_graphs, tubes)
    except MalformedComplexError as exc:
        raise DocumentError(exc.position, exc.message) from exc


def serialize_complex(c: TubularComplex) -> dict:
    return {
        'format_version': FORMAT_VERSION,
        'vertex_graphs': [
            {
                'name': vg.name,
                'vertices': list(vg.graph.vertices),
                'edges': [list(edge) for edge in vg.graph.edges],
            }
            for vg in c.vertex_graphs
        ],
        'tubes': [
            {
                'circle_len': tube.length,
                'end0': {'graph': c.vertex_graphs[tube.ends[0].graph].name, 'walk': list(tube.ends[0].walk)},
                'end1': {'graph': c.vertex_graphs[tube.ends[1].graph].name, 'walk': list(tube.ends[1].walk)},
            }
            for tube in c.tubes
        ],
    }


def dumps_complex(c: TubularComplex) -> str:
    """Canonical text form: equal complexes give identical strings."""
    return json.dumps(serialize_complex(c), sort_keys=True, separators=(',', ':'))


def loads_complex(text: str) -> TubularComplex:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError('', f'not JSON: {exc}') from exc
    return parse_complex(document)


def save_complex(c: TubularComplex, path: Union[str, Path]):
    with open(path, 'w') as handle:
        json.dump(serialize_complex(c), handle, sort_keys=True, indent=2)
        handle.write('\n')


class ComplexLoader:
    def __init__(self):
        self.cache = {}

    def load(self, path: Union[str, Path]) -> TubularComplex:
        key = Path(path).resolve()
        if key not in self.cache:
            try:
                text = key.read_text()
            except OSError as exc:
                raise DocumentError('', f'cannot read {path}: {exc}') from exc
            self.cache[key] = loads_complex(text)
            logger.debug("loaded %s", key)
        return self.cache[key]
