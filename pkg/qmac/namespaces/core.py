from qmac.namespaces._experiments import Experiments


class Core(object):
    def __init__(self):
        self.experiments = Experiments(self)
