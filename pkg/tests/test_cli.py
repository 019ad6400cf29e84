import json

import pytest

from corita.algebra import subalgebra, upper_triangular, upper_triangular_index
from corita.catalog import BUILTINS, builtin_names, run_builtin
from corita.cli import main
from corita.exactlin import QQ, Subspace
from corita.morita import projection_context
from corita.schema import load_workspace, skeleton


def strict_upper_json():
    UT3 = upper_triangular(3)
    vectors = [UT3.basis_vector(upper_triangular_index(3, i, j)) for i, j in ((0, 1), (0, 2), (1, 2))]
    return subalgebra(UT3, Subspace(QQ, UT3.dim, vectors), 'strict').to_json()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding='utf-8')
    return str(path)


class TestExamples:
    def test_list(self, capsys):
        assert main(['examples', 'list']) == 0
        out = capsys.readouterr().out.split()
        assert out == builtin_names()
        assert len(out) == 9

    def test_run_triangular(self, capsys):
        assert main(['examples', 'run', 'triangular-core']) == 0
        out = capsys.readouterr().out
        assert 'three iterations' in out
        assert 'FAIL' not in out

    def test_run_hopf_z2(self):
        assert main(['examples', 'run', 'hopf-z2']) == 0

    def test_unknown_name(self, capsys):
        assert main(['examples', 'run', 'no-such-example']) == 2
        assert 'unknown example' in capsys.readouterr().err

    def test_run_needs_name(self):
        assert main(['examples', 'run']) == 2

    def test_json_is_deterministic(self, tmp_path):
        first, second = tmp_path / 'a.json', tmp_path / 'b.json'
        assert main(['examples', 'run', 'firm-ideal-coring', '--json', str(first)]) == 0
        assert main(['examples', 'run', 'firm-ideal-coring', '--json', str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()
        data = json.loads(first.read_text(encoding='utf-8'))
        assert data['name'] == 'firm-ideal-coring'
        assert data['verdict'] == 'pass'
        assert 'elapsed' not in json.dumps(data)

    def test_json_to_stdout(self, capsys):
        assert main(['examples', 'run', 'triangular-core', '--json', '-', '--pretty']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['verdict'] == 'pass'

    def test_prime_field(self):
        assert main(['examples', 'run', 'triangular-core', '--field', '3']) == 0

    def test_bad_field(self):
        assert main(['examples', 'run', 'triangular-core', '--field', '4']) == 2


class TestBuiltins:
    @pytest.mark.parametrize('name', ['trivial-coring', 'projection-context', 'matrix-context',
        'triangular-core', 'sweedler-kxk', 'separable-bimodule', 'hopf-z2', 'hopf-z3', 'firm-ideal-coring'])
    def test_passes(self, name):
        assert run_builtin(name).passed

    def test_unknown(self):
        with pytest.raises(KeyError):
            run_builtin('nothing')

    def test_summaries(self):
        assert all(b.summary for b in BUILTINS.values())


class TestSchema:
    @pytest.mark.parametrize('kind', ['algebra', 'bimodule', 'context', 'coring', 'workspace'])
    def test_skeleton_loads(self, kind, capsys):
        assert main(['schema', kind]) == 0
        load_workspace(json.loads(capsys.readouterr().out))

    def test_unknown_kind(self):
        assert main(['schema', 'sheaf']) == 2

    def test_skeleton_runs_galois(self, tmp_path, capsys):
        assert main(['schema', 'workspace']) == 0
        path = write(tmp_path, 'ws.json', json.loads(capsys.readouterr().out))
        assert main(['galois', '--file', path, '--expect', 'galois']) == 0
        assert main(['check-coring', '--file', path, '--expect', 'coseparable']) == 0
        assert main(['check-module', '--file', path, '--name', 'M', '--expect', 'firm-right']) == 0


class TestCheckRing:
    def test_nilpotent(self, tmp_path, capsys):
        path = write(tmp_path, 'r.json', strict_upper_json())
        assert main(['check-ring', '--file', path]) == 0
        out = capsys.readouterr().out
        assert '[--] idempotent: no' in out
        assert '[--] firm: no' in out

    def test_expect_firm(self, tmp_path):
        path = write(tmp_path, 'r.json', strict_upper_json())
        assert main(['check-ring', '--file', path, '--expect', 'firm']) == 1

    def test_expect_unknown_property(self, tmp_path, capsys):
        path = write(tmp_path, 'r.json', strict_upper_json())
        assert main(['check-ring', '--file', path, '--expect', 'noetherian']) == 2
        assert 'unknown property' in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(['check-ring', '--file', str(tmp_path / 'none.json')]) == 2
        assert 'cannot read' in capsys.readouterr().err

    def test_not_json(self, tmp_path):
        path = tmp_path / 'r.json'
        path.write_text('{"dim": 1,', encoding='utf-8')
        assert main(['check-ring', '--file', str(path)]) == 2

    def test_not_associative(self, tmp_path, capsys):
        data = {'field': 'Q', 'dim': 2, 'mult': [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]}
        path = write(tmp_path, 'r.json', data)
        assert main(['check-ring', '--file', path]) == 1
        assert 'fails validation' in capsys.readouterr().err

    def test_missing_file_flag(self):
        assert main(['check-ring']) == 2

    def test_verbose_logs_to_stderr(self, tmp_path, capsys):
        path = write(tmp_path, 'r.json', strict_upper_json())
        assert main(['check-ring', '--file', path, '-vv']) == 0
        captured = capsys.readouterr()
        assert 'DEBUG' not in captured.out


class TestContexts:
    def test_check_context(self, tmp_path):
        path = write(tmp_path, 'ctx.json', projection_context().to_json())
        assert main(['check-context', '--file', path]) == 0

    def test_reduce_auto(self, tmp_path):
        path = write(tmp_path, 'ctx.json', projection_context().to_json())
        out = tmp_path / 'out.json'
        assert main(['reduce-context', '--file', path, '--ideal', 'auto', '--json', str(out)]) == 0
        data = json.loads(out.read_text(encoding='utf-8'))
        names = [r['name'] for r in data['items']]
        assert len(names) == len(set(names))
        reduced = [r for r in data['items'] if r['name'] == 'reduced context'][0]['witness']
        assert 'wt' in reduced
        assert 'bt' in reduced

    def test_unknown_ideal(self, tmp_path, capsys):
        path = write(tmp_path, 'ctx.json', projection_context().to_json())
        assert main(['reduce-context', '--file', path, '--ideal', 'B']) == 2
        assert 'no ideal named' in capsys.readouterr().err

    def test_kato_ohtake(self, tmp_path):
        path = write(tmp_path, 'ctx.json', projection_context().to_json())
        assert main(['kato-ohtake', '--file', path, '--expect', 'equivalence']) == 0


class TestComoduleCommands:
    def test_workspace_commands(self, tmp_path, capsys):
        assert main(['schema', 'workspace']) == 0
        path = write(tmp_path, 'ws.json', json.loads(capsys.readouterr().out))
        assert main(['coseparable', '--file', path]) == 0
        assert main(['b-structure', '--file', path, '--expect', 'conditions']) == 0
        assert main(['extension', '--file', path, '--expect', 'hypotheses']) == 0
        assert main(['galois', '--file', path, '--other', 'Σ', '--expect', 'natural-iso']) == 0

    def test_ambiguous_name(self, tmp_path, capsys):
        ws = skeleton('workspace')
        ws['comodules']['Σ2'] = ws['comodules']['Σ']
        path = write(tmp_path, 'ws.json', ws)
        assert main(['galois', '--file', path]) == 2
        assert 'name one of' in capsys.readouterr().err
