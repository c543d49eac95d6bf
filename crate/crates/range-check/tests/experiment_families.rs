use range_check::{co_failure_family, equivalence_experiment, necessity_family};

#[test]
fn necessity_family_passes_both_conditions() {
    for case in necessity_family().unwrap() {
        let report = equivalence_experiment(&case).unwrap();
        println!(
            "{}: differential {:.3e} integral {:.3e}",
            case.label, report.differential_residual, report.integral_residual
        );
        assert!(
            report.differential_residual <= 1e-7,
            "{}: differential {:.3e}",
            case.label,
            report.differential_residual
        );
        assert!(
            report.integral_residual <= 1e-7,
            "{}: integral {:.3e}",
            case.label,
            report.integral_residual
        );
    }
}

#[test]
fn co_failure_family_fails_both_conditions() {
    for case in co_failure_family().unwrap() {
        let report = equivalence_experiment(&case).unwrap();
        println!(
            "{}: differential {:.3e} integral {:.3e}",
            case.label, report.differential_residual, report.integral_residual
        );
        assert!(
            report.differential_residual >= 1e-4,
            "{}: differential {:.3e}",
            case.label,
            report.differential_residual
        );
        assert!(
            report.integral_residual >= 1e-4,
            "{}: integral {:.3e}",
            case.label,
            report.integral_residual
        );
    }
}
