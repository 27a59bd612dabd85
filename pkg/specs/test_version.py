from qmac import version


def test_version():
    assert version is not None
    assert all(part.isdigit() for part in version.split('.'))
