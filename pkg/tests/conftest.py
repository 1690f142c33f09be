# -*- coding: utf-8 -*-
import json

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile('newtonbound', derandomize=True, deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('newtonbound')


@pytest.fixture
def instanceFile(tmp_path):
    """ Writes an instance document and returns its path as a string. """
    def write(e, r, s, t, name='instance.json'):
        path = tmp_path / name
        path.write_text(json.dumps({'e': list(e), 'r': [str(value) for value in r], 's': s, 't': t}))
        return str(path)
    return write


@pytest.fixture
def documentFile(tmp_path):
    def write(document, name='input.json'):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)
    return write
