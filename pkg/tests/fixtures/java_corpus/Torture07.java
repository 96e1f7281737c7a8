package fixtures;

public class Torture07 {
    void empty() {}
    void whitespaceOnly() {
    }
    void tabsOnly() {		}
    void comments() { /* counts as content */ }
    void real() { work(); }
    void work() { }
}
