from click.testing import CliRunner
from gstructure import verify
from gstructure.cli import cli, run
from gstructure.conf import settings
from gstructure.exceptions import VerificationError
import json
import pytest


@pytest.fixture
def invoke():
    runner = CliRunner()

    def invoke(*args):
        result = runner.invoke(cli, list(args), catch_exceptions=False)
        assert result.exit_code == 0, result.output
        return result.output
    return invoke


class TestOutput:
    def test_james(self, invoke):
        assert invoke('james', 'b', '3') == '24 (2^3 · 3)\n'
        assert json.loads(invoke('james', 'a', '9', '--format', 'json')) == {
            'function': 'a', 'r': 9, 'value': {'factors': {'2': 4}, 'value': 16},
        }

    def test_huge_values_are_abbreviated(self, invoke):
        settings.configure(DECIMAL_DIGITS_LIMIT=3)
        assert invoke('james', 'c', '3').startswith('≈10^')

    @pytest.mark.parametrize('function, n, expected', [('j', '15', '9'), ('j2', '23', '4'), ('j4', '11', '0')])
    def test_gap(self, invoke, function, n, expected):
        assert invoke('gap', function, n) == expected + '\n'

    def test_weyl_dim(self, invoke):
        assert invoke('weyl-dim', 'C', '3', '0,1,0', '--method', 'both') == '14 14\n'
        assert invoke('weyl-dim', 'B', '3', '0,0,1') == '8\n'

    def test_real_dim(self, invoke):
        assert invoke('real-dim', 'SU', '5', '0,1,0,0') == '20 complex\n'
        assert invoke('real-dim', 'SO', '10', '0,0,0,2,0') == '126 unspecified lower-bound\n'
        assert json.loads(invoke('real-dim', 'Sp', '3', '1,0,0', '--format', 'json'))['real_dim'] == 12

    def test_enumerate(self, invoke):
        assert invoke('enumerate', 'B', '3', '--max-dim', '7', '--filter', 'SO') == '1\tB3(0,0,0)\n7\tB3(1,0,0)\n'
        assert invoke('enumerate', 'B', '3', '--max-dim', '7', '--filter', 'SO', '--format', 'csv') == (
            'dim,m1,m2,m3\n1,0,0,0\n7,1,0,0\n'
        )
        rows = json.loads(invoke('enumerate', 'A', '3', '--max-dim', '4', '--format', 'json'))
        assert rows == [{'weight': [0, 0, 0], 'dim': 1}, {'weight': [0, 0, 1], 'dim': 4},
                        {'weight': [1, 0, 0], 'dim': 4}]

    def test_classify(self, invoke, golden):
        output = invoke('classify', '--target', 'SO', '--n', '15', '--source', 'Sp', '--k', '3')
        assert output == golden('classify_SO15_Sp3.json')

    def test_classify_human(self, invoke):
        lines = invoke('classify', '--target', 'SU', '--n', '11', '--source', 'SU', '--k', '9',
                       '--format', 'human').splitlines()
        assert lines == ['SU(9) -> SU(11): NO (case D, not-divisible)', 'm=12 d=1 modulus=24 (2^3 · 3) remainder=12']

    def test_min_k(self, invoke):
        assert invoke('min-k', '--target', 'SU', '--n', '11', '--source', 'SU') == '10\n'
        assert invoke('min-k', '--target', 'Sp', '--n', '11', '--source', 'SU') == 'none\n'

    def test_ko_check(self, invoke):
        assert invoke('ko-check', '--n', '15', '--k', '7') == 'status=cyclic order=32 psi3=3^8 fixed-generator=yes\n'
        assert invoke('ko-check', '--n', '11', '--k', '5') == (
            'status=not-computed-by-paper order=- psi3=- fixed-generator=no\n'
        )
        assert json.loads(invoke('ko-check', '--n', '9', '--k', '7', '--format', 'json'))['fixed_generator'] is False

    def test_verify(self, invoke):
        assert invoke('verify', 'lemma-sp3') == 'lemma-sp3: 1 checks passed\n'
        report = json.loads(invoke('verify', 'lemma-sp3', '--format', 'json'))
        assert report['items'] == [{'total_class': '1 + xty + x^2ty + x^3ty', 'w16': 'x^3ty'}]

    def test_atlas(self, invoke):
        assert invoke('atlas', '--target', 'SO', '--n-range', '9..11', '--source', 'SO') == (
            'n,target,source,sphere_dimension,case,min_k,gap,reason\n'
            '9,SO(9),SO,9,A,8,2,reducible\n'
            '10,SO(10),SO,10,A,,,even-n\n'
            '11,SO(11),SO,11,A,8,4,reducible\n'
        )


class TestExitStatus:
    def test_success(self, capsys):
        assert run(['gap', 'j', '15']) == 0
        assert capsys.readouterr().out == '9\n'

    def test_version(self, capsys):
        assert run(['--version']) == 0
        assert '0.1.0' in capsys.readouterr().out

    def test_out_of_domain(self, capsys):
        assert run(['classify', '--target', 'SO', '--n', '7', '--source', 'SO', '--k', '4']) == 3
        assert 'sphere-dimension' in capsys.readouterr().err

    @pytest.mark.parametrize('argv', [
        ['james', 'd', '3'],
        ['verify', 'nope'],
        ['weyl-dim', 'B', '3', '0,1'],
        ['weyl-dim', 'B', '3', '0,x,1'],
        ['enumerate', 'A', '3', '--max-dim', '-1'],
        ['atlas', '--target', 'SO', '--n-range', '9..5', '--source', 'SO'],
    ])
    def test_usage_errors(self, argv):
        assert run(argv) == 2

    def test_overflow(self, capsys):
        settings.configure(ENUMERATION_SAFETY_CAP=5)
        assert run(['enumerate', 'A', '3', '--max-dim', '1000']) == 2
        assert 'safety cap' in capsys.readouterr().err

    def test_verification_failure(self, monkeypatch, capsys):
        def failing():
            raise VerificationError('total class differs')
        monkeypatch.setitem(verify.BATTERIES, 'lemma-sp3', failing)
        assert run(['verify', 'lemma-sp3']) == 1
        assert 'verification failed' in capsys.readouterr().err
