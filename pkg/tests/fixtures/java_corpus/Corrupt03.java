package fixtures;

public class Corrupt03 {
    public void f() {
        String s = "unterminated;
        g();
    }
