from ..setup_logger import logger
from ..evaluation import run_verification
from .command import Command

class VerifyCommand(Command):
    """
    Runs the numerical property checks and writes the reports.
    """

    def run(self):
        report, scan, toy = run_verification(seed=self.seed)

        self.save_json_output('verify.json', report)
        self.save_csv('order_scan.csv', scan.to_dataframe())
        self.save_csv('tangent_toy.csv', toy.to_dataframe())

        logger.info('Span check {:.3e}, order scan slope {}'.format(report['span_check'], report['order_scan']['slope']))
        return self.outputs
