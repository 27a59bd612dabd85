version_info = (1, 0, 0)
version = '.'.join(str(v) for v in version_info)
