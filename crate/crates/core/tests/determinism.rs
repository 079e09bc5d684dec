use matroid_t1::census::complexes_up_to;
use matroid_t1::cotangent::t1_table;
use matroid_t1::io::table_to_json;
use matroid_t1::recognition::formula_discrepancies;
use matroid_t1::verify::run_all;

fn snapshot() -> (Vec<String>, Vec<String>, Vec<String>) {
    let census = complexes_up_to(5).unwrap();
    let tables = census
        .iter()
        .map(|c| table_to_json(&t1_table(c).unwrap()))
        .collect();
    let discrepancies = census
        .iter()
        .map(|c| format!("{:?}", formula_discrepancies(c).unwrap()))
        .collect();
    let reports = run_all(4)
        .unwrap()
        .iter()
        .map(|r| format!("{r:?}"))
        .collect();
    (tables, discrepancies, reports)
}

#[test]
fn single_thread_matches_default_pool() {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(snapshot);
    let wide = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(snapshot);
    assert_eq!(single, snapshot());
    assert_eq!(single, wide);
}
