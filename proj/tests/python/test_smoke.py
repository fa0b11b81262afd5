import pantograph


def test_import():
    assert pantograph is not None
